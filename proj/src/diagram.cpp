#include "qbrauer/diagram.hpp"

#include "qbrauer/errors.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace qbrauer {

namespace {

std::string dot_name(int dot, int l) {
    return dot < l ? "T" + std::to_string(dot + 1) : "B" + std::to_string(dot - l + 1);
}

int parse_dot(std::string_view tok, int l) {
    if (tok.size() < 2 || (tok[0] != 'T' && tok[0] != 'B')) throw std::invalid_argument("bad dot '" + std::string(tok) + "'");
    int idx = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), idx);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || idx < 1 || idx > l)
        throw std::invalid_argument("bad dot '" + std::string(tok) + "'");
    return tok[0] == 'T' ? idx - 1 : l + idx - 1;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

void enumerate_rec(int l, std::vector<int>& mate, std::vector<BrauerDiagram>& out) {
    auto first = std::find(mate.begin(), mate.end(), -1);
    if (first == mate.end()) {
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < 2 * l; ++a)
            if (a < mate[static_cast<size_t>(a)]) edges.emplace_back(a, mate[static_cast<size_t>(a)]);
        out.push_back(BrauerDiagram::from_edges(l, edges));
        return;
    }
    const int a = static_cast<int>(first - mate.begin());
    for (int b = a + 1; b < 2 * l; ++b) {
        if (mate[static_cast<size_t>(b)] != -1) continue;
        mate[static_cast<size_t>(a)] = b;
        mate[static_cast<size_t>(b)] = a;
        enumerate_rec(l, mate, out);
        mate[static_cast<size_t>(a)] = -1;
        mate[static_cast<size_t>(b)] = -1;
    }
}

}  // namespace

BrauerDiagram BrauerDiagram::identity(int l) {
    std::vector<int> perm(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) perm[static_cast<size_t>(i)] = i + 1;
    return from_permutation(perm);
}

BrauerDiagram BrauerDiagram::from_edges(int l, const std::vector<std::pair<int, int>>& edges) {
    if (l < 1) throw std::invalid_argument("diagram size must be positive");
    if (static_cast<int>(edges.size()) != l) throw std::invalid_argument("an l-diagram has exactly l edges");
    std::vector<int> mate(2 * static_cast<size_t>(l), -1);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= 2 * l || b >= 2 * l || a == b) throw std::invalid_argument("edge endpoint out of range");
        if (mate[static_cast<size_t>(a)] != -1 || mate[static_cast<size_t>(b)] != -1)
            throw std::invalid_argument("dot used by two edges");
        mate[static_cast<size_t>(a)] = b;
        mate[static_cast<size_t>(b)] = a;
    }
    return BrauerDiagram(l, std::move(mate));
}

BrauerDiagram BrauerDiagram::from_permutation(const std::vector<int>& perm) {
    const int l = static_cast<int>(perm.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < l; ++i) {
        const int img = perm[static_cast<size_t>(i)];
        if (img < 1 || img > l) throw std::invalid_argument("permutation image out of range");
        edges.emplace_back(i, l + img - 1);
    }
    return from_edges(l, edges);
}

BrauerDiagram BrauerDiagram::parse(std::string_view text) {
    text = trim(text);
    if (text.rfind("l=", 0) != 0) throw std::invalid_argument("diagram text must start with 'l='");
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw std::invalid_argument("diagram text needs ';' after the size");
    std::string_view size_tok = text.substr(2, semi - 2);
    int l = 0;
    auto [ptr, ec] = std::from_chars(size_tok.data(), size_tok.data() + size_tok.size(), l);
    if (ec != std::errc() || ptr != size_tok.data() + size_tok.size()) throw std::invalid_argument("bad diagram size");
    std::vector<std::pair<int, int>> edges;
    std::string_view rest = text.substr(semi + 1);
    while (!trim(rest).empty()) {
        auto comma = rest.find(',');
        std::string_view tok = trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        auto dash = tok.find('-');
        if (dash == std::string_view::npos) throw std::invalid_argument("bad edge '" + std::string(tok) + "'");
        edges.emplace_back(parse_dot(trim(tok.substr(0, dash)), l), parse_dot(trim(tok.substr(dash + 1)), l));
    }
    return from_edges(l, edges);
}

std::vector<std::pair<int, int>> BrauerDiagram::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < 2 * l_; ++a)
        if (a < mate(a)) out.emplace_back(a, mate(a));
    return out;
}

bool BrauerDiagram::is_permutation() const {
    for (int a = 0; a < l_; ++a)
        if (mate(a) < l_) return false;
    return true;
}

std::string BrauerDiagram::to_string() const {
    std::string out = "l=" + std::to_string(l_) + ";";
    bool first = true;
    for (auto [a, b] : edges()) {
        out += first ? " " : ", ";
        first = false;
        out += dot_name(a, l_) + "-" + dot_name(b, l_);
    }
    return out;
}

Composite compose(const BrauerDiagram& d1, const BrauerDiagram& d2) {
    const int l = d1.size();
    if (d2.size() != l) throw std::invalid_argument("cannot compose diagrams of different sizes");
    // Middle dot m is d1's B_{m+1} and d2's T_{m+1}.
    std::vector<char> middle_seen(static_cast<size_t>(l), 0);

    // Leaving d1 downwards through middle dot m, follow the path until it
    // exits on an outer dot; returns that dot in result numbering.
    auto walk_down = [&](int m) {
        for (;;) {
            middle_seen[static_cast<size_t>(m)] = 1;
            const int p = d2.mate(m);
            if (p >= l) return p;  // d2 bottom row == result bottom row
            middle_seen[static_cast<size_t>(p)] = 1;
            const int back = d1.mate(l + p);
            if (back < l) return back;  // d1 top row
            m = back - l;
        }
    };
    auto walk_up = [&](int m) {
        for (;;) {
            middle_seen[static_cast<size_t>(m)] = 1;
            const int p = d1.mate(l + m);
            if (p < l) return p;
            middle_seen[static_cast<size_t>(p - l)] = 1;
            const int down = d2.mate(p - l);
            if (down >= l) return down;
            m = down;
        }
    };

    std::vector<std::pair<int, int>> edges;
    std::vector<char> outer_done(2 * static_cast<size_t>(l), 0);
    for (int t = 0; t < l; ++t) {
        if (outer_done[static_cast<size_t>(t)]) continue;
        const int p = d1.mate(t);
        const int end = p < l ? p : walk_down(p - l);
        outer_done[static_cast<size_t>(t)] = outer_done[static_cast<size_t>(end)] = 1;
        edges.emplace_back(t, end);
    }
    for (int b = l; b < 2 * l; ++b) {
        if (outer_done[static_cast<size_t>(b)]) continue;
        const int p = d2.mate(b);
        const int end = p >= l ? p : walk_up(p);
        outer_done[static_cast<size_t>(b)] = outer_done[static_cast<size_t>(end)] = 1;
        edges.emplace_back(b, end);
    }
    int loops = 0;
    for (int m = 0; m < l; ++m) {
        if (middle_seen[static_cast<size_t>(m)]) continue;
        ++loops;
        int cur = m;
        do {
            middle_seen[static_cast<size_t>(cur)] = 1;
            const int via_d2 = d2.mate(cur);  // a top dot of d2, hence middle
            middle_seen[static_cast<size_t>(via_d2)] = 1;
            cur = d1.mate(l + via_d2) - l;  // back up through d1's bottom row
        } while (cur != m);
    }
    return {loops, BrauerDiagram::from_edges(l, edges)};
}

BrauerDiagram brauer_generator(GeneratorKind kind, int i, int l) {
    if (i < 1 || i > l - 1)
        throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." + std::to_string(l - 1));
    if (kind == GeneratorKind::sigma) {
        std::vector<int> perm(static_cast<size_t>(l));
        for (int k = 0; k < l; ++k) perm[static_cast<size_t>(k)] = k + 1;
        std::swap(perm[static_cast<size_t>(i - 1)], perm[static_cast<size_t>(i)]);
        return BrauerDiagram::from_permutation(perm);
    }
    std::vector<std::pair<int, int>> edges{{i - 1, i}, {l + i - 1, l + i}};
    for (int k = 0; k < l; ++k)
        if (k != i - 1 && k != i) edges.emplace_back(k, l + k);
    return BrauerDiagram::from_edges(l, edges);
}

std::vector<BrauerDiagram> enumerate_diagrams(int l) {
    if (l < 1) throw std::invalid_argument("diagram size must be positive");
    if (l > kMaxEnumeratedDiagramSize)
        throw GuardError("enumerating " + std::to_string(l) + "-diagrams exceeds guard l <= " +
                         std::to_string(kMaxEnumeratedDiagramSize));
    std::vector<int> mate(2 * static_cast<size_t>(l), -1);
    std::vector<BrauerDiagram> out;
    enumerate_rec(l, mate, out);
    return out;
}

PolyMatrix diagram_to_operator(const BrauerDiagram& d, int n) {
    const int l = d.size();
    const LegSpace space(n, l);
    const auto edges = d.edges();
    std::vector<Entry<LaurentPoly>> out;
    // One nonzero per assignment of a value to every edge.
    std::vector<int> value(static_cast<size_t>(l), 0);
    std::vector<int> row_digits(static_cast<size_t>(l)), col_digits(static_cast<size_t>(l));
    for (;;) {
        for (size_t e = 0; e < edges.size(); ++e) {
            for (int dot : {edges[e].first, edges[e].second}) {
                if (dot < l)
                    row_digits[static_cast<size_t>(dot)] = value[e];
                else
                    col_digits[static_cast<size_t>(dot - l)] = value[e];
            }
        }
        out.push_back({space.index(row_digits), space.index(col_digits), LaurentPoly(1)});
        size_t k = 0;
        while (k < value.size() && ++value[k] == n) value[k++] = 0;
        if (k == value.size()) break;
    }
    return PolyMatrix::from_entries(space.dimension(), space.dimension(), std::move(out));
}

}  // namespace qbrauer
