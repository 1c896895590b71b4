#include "schubert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace schubert {

std::string to_string(const Var& v) {
    return (v.kind == Var::X ? "x" : "y") + std::to_string(v.index);
}

namespace {

int degree_of(const SparsePoly::Exponent& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

bool SparsePoly::TermOrder::operator()(const Exponent& a, const Exponent& b) const {
    const int da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return b < a;
}

SparsePoly SparsePoly::constant(int n, const mpz_class& c) {
    SparsePoly p(n);
    p.add_term(Exponent(static_cast<std::size_t>(2 * n), 0), c);
    return p;
}

SparsePoly SparsePoly::variable(int n, Var v) {
    if (v.index < 1 || v.index > n) throw std::out_of_range("variable " + to_string(v) + " outside budget");
    SparsePoly p(n);
    Exponent e(static_cast<std::size_t>(2 * n), 0);
    e[static_cast<std::size_t>((v.kind == Var::X ? 0 : n) + v.index - 1)] = 1;
    p.add_term(e, 1);
    return p;
}

mpz_class SparsePoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class SparsePoly::constant_term() const {
    return coefficient(Exponent(static_cast<std::size_t>(2 * n_), 0));
}

int SparsePoly::total_degree() const {
    return terms_.empty() ? -1 : degree_of(terms_.begin()->first);
}

void SparsePoly::add_term(const Exponent& e, const mpz_class& c) {
    if (e.size() != static_cast<std::size_t>(2 * n_)) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePoly::check_budget(const SparsePoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomial variable budgets differ; pad explicitly");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    check_budget(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    check_budget(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_budget(b);
    SparsePoly out(a.n_);
    SparsePoly::Exponent e(static_cast<std::size_t>(2 * a.n_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) {
                const int s = ea[k] + eb[k];
                if (s > 255) throw std::overflow_error("exponent exceeds 255");
                e[k] = static_cast<std::uint8_t>(s);
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

SparsePoly SparsePoly::padded(int m) const {
    if (m < n_) throw std::invalid_argument("cannot shrink a variable budget");
    SparsePoly out(m);
    for (const auto& [e, c] : terms_) {
        Exponent f(static_cast<std::size_t>(2 * m), 0);
        std::copy(e.begin(), e.begin() + n_, f.begin());
        std::copy(e.begin() + n_, e.end(), f.begin() + m);
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

SparsePoly SparsePoly::with_y_zero() const {
    SparsePoly out(n_);
    for (const auto& [e, c] : terms_)
        if (std::all_of(e.begin() + n_, e.end(), [](auto v) { return v == 0; })) out.terms_.emplace(e, c);
    return out;
}

SparsePoly SparsePoly::with_signs(int sx, int sy) const {
    SparsePoly out(n_);
    for (const auto& [e, c] : terms_) {
        int parity = 0;
        if (sx < 0) parity += std::accumulate(e.begin(), e.begin() + n_, 0);
        if (sy < 0) parity += std::accumulate(e.begin() + n_, e.end(), 0);
        out.terms_.emplace(e, parity % 2 ? mpz_class(-c) : c);
    }
    return out;
}

SparsePoly SparsePoly::swapped_xy() const {
    SparsePoly out(n_);
    for (const auto& [e, c] : terms_) {
        Exponent f(e.size());
        std::copy(e.begin() + n_, e.end(), f.begin());
        std::copy(e.begin(), e.begin() + n_, f.begin() + n_);
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

SparsePoly divided_difference(const SparsePoly& p, int i) {
    const int n = p.nvars();
    if (i < 1 || i >= n) throw std::out_of_range("divided difference index outside 1..n-1");
    const auto xi = static_cast<std::size_t>(i - 1), xj = xi + 1;
    SparsePoly out(n);
    for (const auto& [e, c] : p.terms()) {
        const int a = e[xi], b = e[xj];
        if (a == b) continue;
        // x_i^a x_j^b - x_i^b x_j^a over (x_i - x_j): common factor (x_i x_j)^min
        // times the complete homogeneous sum of degree |a-b|-1.
        const int lo = std::min(a, b), gap = std::abs(a - b);
        const mpz_class coef = a > b ? c : mpz_class(-c);
        auto f = e;
        for (int k = 0; k < gap; ++k) {
            f[xi] = static_cast<std::uint8_t>(lo + gap - 1 - k);
            f[xj] = static_cast<std::uint8_t>(lo + k);
            out.add_term(f, coef);
        }
    }
    return out;
}

namespace {

SparsePoly top_schubert(int n) {
    auto out = SparsePoly::constant(n, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j)
            out = out * (SparsePoly::variable(n, {Var::X, i}) - SparsePoly::variable(n, {Var::Y, j}));
    return out;
}

struct WordHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) h = h * 131 + static_cast<std::size_t>(x);
        return h;
    }
};

std::shared_mutex cache_mutex;
std::unordered_map<std::vector<int>, SparsePoly, WordHash> cache;

int first_ascent(const Permutation& w) {
    for (int i = 1; i < w.size(); ++i)
        if (w(i) < w(i + 1)) return i;
    return 0;
}

}  // namespace

SparsePoly double_schubert(const Permutation& w) {
    std::vector<int> key(w.word().begin(), w.word().end());
    {
        std::shared_lock lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const int i = first_ascent(w);
    SparsePoly result = i == 0 ? top_schubert(w.size())
                               : divided_difference(double_schubert(w * Permutation::simple(i, w.size())), i);
    std::unique_lock lock(cache_mutex);
    return cache.try_emplace(std::move(key), std::move(result)).first->second;
}

SparsePoly single_schubert(const Permutation& w) { return double_schubert(w).with_y_zero(); }

std::vector<int> descent_path(const Permutation& w, bool first) {
    std::vector<int> steps;
    Permutation x = w;
    for (;;) {
        int pick = 0;
        for (int i = 1; i < x.size(); ++i) {
            if (x(i) < x(i + 1)) {
                pick = i;
                if (first) break;
            }
        }
        if (pick == 0) break;
        steps.push_back(pick);
        x = x * Permutation::simple(pick, x.size());
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

SparsePoly schubert_from_path(int n, const std::vector<int>& path) {
    auto p = top_schubert(n);
    for (int i : path) p = divided_difference(p, i);
    return p;
}

mpq_class substitute(const SparsePoly& p, const std::map<Var, mpq_class>& assignment) {
    const int n = p.nvars();
    std::vector<const mpq_class*> value(static_cast<std::size_t>(2 * n), nullptr);
    for (const auto& [v, q] : assignment)
        if (v.index >= 1 && v.index <= n) value[static_cast<std::size_t>((v.kind == Var::X ? 0 : n) + v.index - 1)] = &q;
    mpq_class total = 0;
    for (const auto& [e, c] : p.terms()) {
        mpq_class t = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!e[k]) continue;
            if (!value[k]) {
                const Var v{k < static_cast<std::size_t>(n) ? Var::X : Var::Y, static_cast<int>(k % n) + 1};
                throw std::invalid_argument("no value for variable " + to_string(v));
            }
            for (int r = 0; r < e[k]; ++r) t *= *value[k];
        }
        total += t;
    }
    return total;
}

mpq_class evaluate_uniform(const SparsePoly& p, const mpq_class& x, const mpq_class& y) {
    std::map<Var, mpq_class> a;
    for (int i = 1; i <= p.nvars(); ++i) {
        a[{Var::X, i}] = x;
        a[{Var::Y, i}] = y;
    }
    return substitute(p, a);
}

bool check_identity_2(const Permutation& w) {
    const int n = w.size();
    SparsePoly rhs(n);
    const auto winv = w.inverse();
    for (const auto& u : weak_order_ideal(w)) {
        // S(x) -> S(-y): swap x and y, then negate y.
        const auto right = single_schubert(u * winv).swapped_xy().with_signs(1, -1);
        rhs += single_schubert(u) * right;
    }
    return rhs == double_schubert(w);
}

bool check_transition_identity(const Permutation& w) {
    const auto t = maximal_transition(w);
    const int n = w.size();
    auto rhs = double_schubert(t.v) *
               (SparsePoly::variable(n, {Var::X, t.alpha}) - SparsePoly::variable(n, {Var::Y, w(t.beta)}));
    for (const auto& psi : t.psis) rhs += double_schubert(psi);
    return rhs == double_schubert(w);
}

std::string to_string(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    const int n = p.nvars();
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        const mpz_class mag = abs(c);
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!e[k]) continue;
            if (!mono.empty()) mono += '*';
            mono += (k < static_cast<std::size_t>(n) ? 'x' : 'y') + std::to_string(k % n + 1);
            if (e[k] > 1) mono += '^' + std::to_string(e[k]);
        }
        if (mono.empty()) out += mag.get_str();
        else if (mag == 1) out += mono;
        else out += mag.get_str() + '*' + mono;
    }
    return out;
}

namespace {

// Recursive descent over: poly := ['-'|'+'] term (('+'|'-') term)*,
// term := factor ('*' factor)*, factor := int | var ['^' int] | '(' poly ')' ['^' int].
class PolyParser {
public:
    PolyParser(std::string_view s, int n) : s_(s), n_(n) {}

    SparsePoly parse() {
        auto p = poly();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char ch) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip();
        const auto start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }
    int small_int() {
        const auto d = digits();
        if (d.size() > 4) fail("exponent too large");
        return std::stoi(d);
    }
    SparsePoly power(SparsePoly base) {
        if (!eat('^')) return base;
        const int k = small_int();
        auto out = SparsePoly::constant(n_, 1);
        for (int r = 0; r < k; ++r) out = out * base;
        return out;
    }
    SparsePoly factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            auto inner = poly();
            if (!eat(')')) fail("expected ')'");
            return power(std::move(inner));
        }
        if (ch == 'x' || ch == 'y') {
            ++pos_;
            const int idx = small_int();
            if (idx < 1 || idx > n_) fail("variable index outside budget");
            return power(SparsePoly::variable(n_, {ch == 'x' ? Var::X : Var::Y, idx}));
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) return SparsePoly::constant(n_, mpz_class(digits()));
        fail(std::string("unexpected character '") + ch + "'");
    }
    SparsePoly term() {
        auto p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }
    SparsePoly poly() {
        SparsePoly acc(n_);
        bool negative = eat('-');
        if (!negative) eat('+');
        for (;;) {
            auto t = term();
            if (negative) acc -= t;
            else acc += t;
            if (eat('+')) negative = false;
            else if (eat('-')) negative = true;
            else break;
        }
        return acc;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int n_;
};

}  // namespace

SparsePoly parse_poly(std::string_view text, int n) {
    if (n < 0) {
        n = 0;
        for (std::size_t k = 0; k < text.size(); ++k) {
            if (text[k] != 'x' && text[k] != 'y') continue;
            int v = 0;
            std::size_t j = k + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 100000)
                v = v * 10 + (text[j++] - '0');
            n = std::max(n, v);
        }
    }
    return PolyParser(text, n).parse();
}

}  // namespace schubert
