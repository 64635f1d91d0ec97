#include "tq/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace tq {

Presentation Presentation::commutative(std::vector<std::string> names) {
    Presentation p;
    p.names = std::move(names);
    int n = p.num_gens();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            Monomial m = Monomial::unit(n);
            m.exp[i] += 1;
            m.exp[j] += 1;
            p.rules[{j, i}] = NcPoly::monomial(m);
        }
    return p;
}

Presentation Presentation::manin(const Rational& q, std::string a, std::string b) {
    Presentation p;
    p.names = {std::move(a), std::move(b)};
    Monomial m(std::vector<std::uint32_t>{1, 1});
    p.rules[{1, 0}] = NcPoly::monomial(m, Scalar(q));
    return p;
}

Presentation Presentation::single(std::string name) {
    Presentation p;
    p.names = {std::move(name)};
    return p;
}

std::string check_rule(int num_gens, int j, int i, const NcPoly& rhs) {
    if (j <= i || i < 0 || j >= num_gens)
        return "rule left side must be a descending generator pair";
    for (const auto& [m, c] : rhs) {
        if (m.num_gens() != num_gens) return "rule term has wrong generator count";
        int d = m.degree();
        if (d > 2) return "rule degree exceeds 2";
        if (d == 2) {
            // Ordered word [a, b], a <= b by construction of Monomial.
            std::vector<int> w = m.word();
            std::vector<int> lhs = {j, i};
            if (word_cmp(w, lhs) >= 0)
                return "rule term does not decrease the word order (rewriting would not terminate)";
        }
    }
    return {};
}

std::vector<std::string> validate_presentation(const Presentation& pres) {
    std::vector<std::string> problems;
    int n = pres.num_gens();
    if (n <= 0) problems.push_back("presentation has no generators");
    for (const auto& [key, rhs] : pres.rules) {
        auto [j, i] = key;
        std::string err = check_rule(n, j, i, rhs);
        if (!err.empty())
            problems.push_back("rule for pair (" + std::to_string(j) + "," +
                               std::to_string(i) + "): " + err);
    }
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (!pres.rule(j, i))
                problems.push_back("missing rule for pair " + pres.names[j] + " " +
                                   pres.names[i]);
    return problems;
}

namespace {

enum class Strategy { leftmost, rightmost };

int find_descent(std::span<const int> w, Strategy s) {
    if (s == Strategy::leftmost) {
        for (std::size_t p = 0; p + 1 < w.size(); ++p)
            if (w[p] > w[p + 1]) return static_cast<int>(p);
    } else {
        for (std::size_t p = w.size(); p-- > 1;)
            if (w[p - 1] > w[p]) return static_cast<int>(p - 1);
    }
    return -1;
}

struct WordLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        return word_cmp(a, b) < 0;
    }
};

NcPoly straighten(std::span<const int> word, const Presentation& pres, Strategy strat) {
    int n = pres.num_gens();
    for (int g : word)
        if (g < 0 || g >= n) throw std::invalid_argument("normal_form: generator index out of range");

    std::map<std::vector<int>, Scalar, WordLess> pending;
    pending[std::vector<int>(word.begin(), word.end())] = Scalar(1);
    NcPoly out;

    // Every rewrite replaces a word by strictly smaller ones in the
    // degree-then-lex order (enforced by check_rule), so this drains.
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        std::vector<int> w = it->first;
        Scalar c = it->second;
        pending.erase(it);

        int p = find_descent(w, strat);
        if (p < 0) {
            out.add_term(Monomial::from_sorted_word(n, w), c);
            continue;
        }
        const NcPoly* r = pres.rule(w[p], w[p + 1]);
        if (!r)
            throw std::invalid_argument("normal_form: no rule for pair " +
                                        pres.names[w[p]] + " " + pres.names[w[p + 1]]);
        for (const auto& [m, rc] : *r) {
            std::vector<int> nw(w.begin(), w.begin() + p);
            for (int g : m.word()) nw.push_back(g);
            nw.insert(nw.end(), w.begin() + p + 2, w.end());
            auto [slot, inserted] = pending.try_emplace(std::move(nw), Scalar(0));
            slot->second += c * rc;
            if (slot->second.is_zero()) pending.erase(slot);
        }
    }
    return out;
}

}  // namespace

NcPoly normal_form(std::span<const int> word, const Presentation& pres) {
    return straighten(word, pres, Strategy::leftmost);
}

NcPoly multiply(const NcPoly& p, const NcPoly& r, const Presentation& pres) {
    NcPoly out;
    for (const auto& [mp, cp] : p) {
        std::vector<int> wp = mp.word();
        for (const auto& [mr, cr] : r) {
            std::vector<int> w = wp;
            for (int g : mr.word()) w.push_back(g);
            out += straighten(w, pres, Strategy::leftmost) * (cp * cr);
        }
    }
    return out;
}

ConfluenceReport check_confluence(const Presentation& pres, int degree_bound) {
    if (degree_bound < 3)
        throw std::invalid_argument("check_confluence: degree bound must be at least 3");
    ConfluenceReport report;
    report.degree_bound = degree_bound;
    int n = pres.num_gens();

    // Enumerate all words of degree 3..bound and compare the two strategies.
    // Degree-3 words include every critical overlap x_k x_j x_i.
    std::vector<int> w;
    auto visit = [&](auto&& self, int depth) -> void {
        if (static_cast<int>(w.size()) >= 3) {
            NcPoly left = straighten(w, pres, Strategy::leftmost);
            NcPoly right = straighten(w, pres, Strategy::rightmost);
            if (left != right)
                report.failures.push_back({w, left, right});
        }
        if (depth == 0) return;
        for (int g = 0; g < n; ++g) {
            w.push_back(g);
            self(self, depth - 1);
            w.pop_back();
        }
    };
    // Build words up to the bound; only lengths >= 3 are inspected (shorter
    // words admit a single rewrite path).
    visit(visit, degree_bound);

    std::sort(report.failures.begin(), report.failures.end(),
              [](const ConfluenceFailure& a, const ConfluenceFailure& b) {
                  return word_cmp(a.word, b.word) < 0;
              });
    return report;
}

}  // namespace tq
