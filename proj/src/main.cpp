#include "meandrics/cli.hpp"

int main(int argc, char** argv) { return meandrics::run(argc, argv); }
