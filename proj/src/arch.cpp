#include "meandrics/arch.hpp"

namespace meandrics {

bool ArchConfig::is_valid() const {
    int m = order_2n;
    if (m <= 0 || m % 2 != 0 || static_cast<int>(match.size()) != m) return false;
    for (int i = 0; i < m; ++i) {
        int j = match[i];
        if (j < 0 || j >= m || j == i || match[j] != i) return false;
    }
    // Noncrossing + even enclosure fall out of balanced-parenthesis validity.
    std::vector<int> stack;
    for (int i = 0; i < m; ++i) {
        if (match[i] > i) {
            stack.push_back(i);
        } else {
            if (stack.empty() || match[i] != stack.back()) return false;
            stack.pop_back();
        }
    }
    return stack.empty();
}

std::string ArchConfig::dyck() const {
    std::string w(order_2n, ')');
    for (int i = 0; i < order_2n; ++i)
        if (match[i] > i) w[i] = '(';
    return w;
}

ArchConfig arch_from_dyck(const std::string& word) {
    int m = static_cast<int>(word.size());
    ArchConfig a;
    a.order_2n = m;
    a.match.assign(m, -1);
    std::vector<int> stack;
    for (int i = 0; i < m; ++i) {
        if (word[i] == '(') {
            stack.push_back(i);
        } else if (word[i] == ')') {
            if (stack.empty()) throw ValidationError("unbalanced arch word");
            a.match[i] = stack.back();
            a.match[stack.back()] = i;
            stack.pop_back();
        } else {
            throw ValidationError("arch word must contain only '(' and ')'");
        }
    }
    if (!stack.empty()) throw ValidationError("unbalanced arch word");
    return a;
}

namespace {

// Lexicographic Dyck enumeration: extend with '(' while opens remain, with
// ')' while the prefix stays balanced. '(' < ')' gives the required order.
void extend(ArchConfig& a, std::vector<int>& stack, int pos, int open_left,
            const std::function<void(const ArchConfig&)>& fn) {
    if (pos == a.order_2n) {
        fn(a);
        return;
    }
    if (open_left > 0) {
        stack.push_back(pos);
        extend(a, stack, pos + 1, open_left - 1, fn);
        stack.pop_back();
    }
    if (!stack.empty()) {
        int j = stack.back();
        stack.pop_back();
        a.match[j] = pos;
        a.match[pos] = j;
        extend(a, stack, pos + 1, open_left, fn);
        stack.push_back(j);
    }
}

}  // namespace

void for_each_arch(int n, const std::function<void(const ArchConfig&)>& fn) {
    if (n < 1) throw ValidationError("arch order must be >= 1");
    ArchConfig a;
    a.order_2n = 2 * n;
    a.match.assign(2 * n, -1);
    std::vector<int> stack;
    extend(a, stack, 0, n, fn);
}

std::vector<ArchConfig> enumerate_arches(int n) {
    std::vector<ArchConfig> out;
    out.reserve(catalan(n).get_ui() < (1u << 24) ? catalan(n).get_ui() : 0);
    for_each_arch(n, [&](const ArchConfig& a) { out.push_back(a); });
    return out;
}

ArchConfig rainbow(int n) {
    if (n < 1) throw ValidationError("arch order must be >= 1");
    ArchConfig a;
    a.order_2n = 2 * n;
    a.match.resize(2 * n);
    for (int i = 0; i < 2 * n; ++i) a.match[i] = 2 * n - 1 - i;
    return a;
}

int glue_components(const ArchConfig& a, const ArchConfig& b) {
    if (a.order_2n != b.order_2n)
        throw ValidationError("glue_components: order mismatch");
    int m = a.order_2n;
    // Follow the closed curve: upper arch from a, then lower arch from b,
    // alternating. The orbit of (lower o upper) visits every second bridge of
    // a loop, so each loop contributes exactly two orbits.
    std::vector<char> seen(m, 0);
    int orbits = 0;
    for (int start = 0; start < m; ++start) {
        if (seen[start]) continue;
        ++orbits;
        int i = start;
        do {
            seen[i] = 1;
            i = b.match[a.match[i]];
        } while (i != start);
    }
    return orbits / 2;
}

int winding(const ArchConfig& a) {
    int n = a.order_2n / 2, w = 0;
    for (int i = 0; i < n; ++i)
        if (a.match[i] >= n) ++w;
    return w;
}

}  // namespace meandrics
