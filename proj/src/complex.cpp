#include "schubert/complex.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace schubert {

LinearForm LinearForm::variable(MapVar v, const mpq_class& c) {
    LinearForm f;
    if (c != 0) f.coef_.emplace(v, c);
    return f;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    constant_ += o.constant_;
    for (const auto& [v, c] : o.coef_) {
        auto [it, inserted] = coef_.try_emplace(v, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coef_.erase(it);
        }
    }
    return *this;
}

LinearForm operator*(LinearForm a, const mpq_class& c) {
    if (c == 0) return LinearForm();
    a.constant_ *= c;
    for (auto& [v, x] : a.coef_) x *= c;
    return a;
}

mpq_class LinearForm::evaluate(const Matrix<mpq_class>& values) const {
    mpq_class total = constant_;
    for (const auto& [v, c] : coef_) {
        if (v.m < 1 || v.u < 1 || static_cast<std::size_t>(v.m) > values.rows() ||
            static_cast<std::size_t>(v.u) > values.cols())
            throw std::out_of_range("specialization matrix is too small");
        total += c * values(static_cast<std::size_t>(v.m - 1), static_cast<std::size_t>(v.u - 1));
    }
    return total;
}

std::string to_string(const LinearForm& f) {
    std::string out;
    auto emit = [&](const mpq_class& c, const std::string& name) {
        const bool negative = c < 0;
        const mpq_class mag = abs(c);
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        if (name.empty()) out += mag.get_str();
        else out += (mag == 1 ? "" : mag.get_str() + "*") + name;
    };
    // grouped by source basis vector: all of d(e_1) first
    std::vector<std::pair<MapVar, mpq_class>> terms(f.coefficients().begin(), f.coefficients().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first.u < b.first.u; });
    for (const auto& [v, c] : terms) emit(c, "d[" + std::to_string(v.m) + "][" + std::to_string(v.u) + "]");
    if (f.constant() != 0) emit(f.constant(), "");
    return out.empty() ? "0" : out;
}

FlaggedMap FlaggedMap::generic(int n) {
    return {n, Kind::Generic, Matrix<mpq_class>(static_cast<std::size_t>(n), static_cast<std::size_t>(n)), 0};
}

FlaggedMap FlaggedMap::rational(Matrix<mpq_class> entries) {
    if (entries.rows() != entries.cols()) throw std::invalid_argument("flagged map must be square");
    const int n = static_cast<int>(entries.rows());
    return {n, Kind::Rational, std::move(entries), 0};
}

FlaggedMap FlaggedMap::prime_field(Matrix<mpq_class> entries, std::uint64_t p) {
    if (entries.rows() != entries.cols()) throw std::invalid_argument("flagged map must be square");
    if (p <= (1ULL << 30) || !is_prime(p)) throw std::invalid_argument("prime field modulus must be a prime above 2^30");
    const int n = static_cast<int>(entries.rows());
    return {n, Kind::PrimeField, std::move(entries), p};
}

FlaggedMap FlaggedMap::identity(int n, Kind kind, std::uint64_t p) {
    Matrix<mpq_class> e(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    if (kind == Kind::PrimeField) return prime_field(std::move(e), p ? p : default_prime());
    return rational(std::move(e));
}

FlaggedMap FlaggedMap::zero(int n, Kind kind, std::uint64_t p) {
    Matrix<mpq_class> e(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    if (kind == Kind::PrimeField) return prime_field(std::move(e), p ? p : default_prime());
    return rational(std::move(e));
}

std::vector<std::size_t> ChainComplex::ranks() const {
    std::vector<std::size_t> out;
    for (const auto& b : bases) out.push_back(b.size());
    return out;
}

namespace {

struct GenericComplex {
    std::vector<std::vector<Labeling>> bases;
    std::vector<Matrix<LinearForm>> differentials;
};

struct Term {
    int sign;
    MapVar var;
    RowElement row;
};

// Ambient differential on a row element: one unmarked u in row k becomes m'.
std::vector<Term> row_differential(const RowElement& t, const Permutation& w) {
    const int n = w.size();
    const auto& d = w.diagram();
    std::vector<Term> out;
    int unmarked_before = 0;
    std::size_t start = 0;
    for (int k = 1; k <= n; ++k) {
        std::size_t end = start;
        while (end < d.size() && d[end].row == k) ++end;
        std::vector<int> row(t.begin() + static_cast<long>(start), t.begin() + static_cast<long>(end));
        std::vector<int> seen;
        for (int u : row) {
            if (u < 0 || std::find(seen.begin(), seen.end(), u) != seen.end()) continue;
            seen.push_back(u);
            for (int m = 1; m <= n; ++m) {
                if (std::find(row.begin(), row.end(), -m) != row.end()) continue;
                int sign = unmarked_before % 2 ? -1 : 1;
                for (int x : row)
                    if (x < 0 && x > -m) sign = -sign;
                auto next = row;
                *std::find(next.begin(), next.end(), u) = -m;
                std::sort(next.begin(), next.end());
                RowElement r = t;
                std::copy(next.begin(), next.end(), r.begin() + static_cast<long>(start));
                out.push_back({sign, {m, u}, std::move(r)});
            }
        }
        unmarked_before += static_cast<int>(std::count_if(row.begin(), row.end(), [](int x) { return x > 0; }));
        start = end;
    }
    return out;
}

GenericComplex make_generic(const Permutation& w) {
    const FunctorImage f(w);
    const int n = w.size();
    const int len = w.length();
    GenericComplex g;
    g.bases.resize(static_cast<std::size_t>(len) + 1);
    std::vector<std::size_t> position(f.bsl().size());
    for (std::size_t t = 0; t < f.bsl().size(); ++t) {
        auto& b = g.bases[static_cast<std::size_t>(homological_degree(f.bsl()[t]))];
        position[t] = b.size();
        b.push_back(f.bsl()[t]);
    }
    g.differentials.resize(static_cast<std::size_t>(len) + 1);
    for (int i = 1; i <= len; ++i)
        g.differentials[i] = Matrix<LinearForm>(g.bases[i - 1].size(), g.bases[i].size());

    for (std::size_t t = 0; t < f.bsl().size(); ++t) {
        const auto& src = f.bsl()[t];
        const int deg = homological_degree(src);
        if (deg == 0) continue;
        std::map<ColumnElement, LinearForm> acc;
        for (const auto& term : row_differential(row_element(src), w))
            for (const auto& [c, coef] : phi(term.row, w))
                acc[c] += LinearForm::variable(term.var, mpq_class(term.sign * coef));

        std::map<Weight, std::vector<std::pair<const ColumnElement*, const LinearForm*>>> by_weight;
        for (const auto& [c, form] : acc)
            if (!form.is_zero()) by_weight[column_weight(c, n)].emplace_back(&c, &form);
        for (const auto& [wt, entries] : by_weight) {
            auto it = f.blocks().find(wt);
            if (it == f.blocks().end()) throw std::logic_error("differential leaves the functor image");
            const auto& block = it->second;
            std::vector<LinearForm> b(block.rows.size());
            for (const auto& [c, form] : entries) {
                auto r = std::lower_bound(block.rows.begin(), block.rows.end(), *c);
                if (r == block.rows.end() || *r != *c) throw std::logic_error("differential leaves the functor image");
                b[static_cast<std::size_t>(r - block.rows.begin())] = *form;
            }
            auto sol = block.solver.solve(b, LinearForm());
            if (!sol) throw std::logic_error("differential does not straighten");
            for (std::size_t j = 0; j < block.bsl.size(); ++j)
                g.differentials[deg](position[block.bsl[j]], position[t]) = (*sol)[j];
        }
    }
    return g;
}

std::mutex generic_mutex;
std::map<std::vector<int>, std::shared_ptr<const GenericComplex>> generic_cache;

std::shared_ptr<const GenericComplex> generic_complex(const Permutation& w) {
    std::vector<int> key(w.word().begin(), w.word().end());
    {
        std::lock_guard lock(generic_mutex);
        if (auto it = generic_cache.find(key); it != generic_cache.end()) return it->second;
    }
    auto built = std::make_shared<const GenericComplex>(make_generic(w));
    std::lock_guard lock(generic_mutex);
    return generic_cache.try_emplace(std::move(key), std::move(built)).first->second;
}

std::size_t specialized_rank(const Matrix<LinearForm>& d, const Specialization& s) {
    if (d.rows() == 0 || d.cols() == 0) return 0;
    const auto q = specialize(d, s.values);
    if (!s.prime) return rank(q);
    Matrix<std::uint64_t> m(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) m(i, j) = reduce_mod(q(i, j), *s.prime);
    return rank_mod_p(std::move(m), *s.prime);
}

Specialization own_specialization(const ChainComplex& c) {
    if (c.map.kind == FlaggedMap::Kind::Generic)
        throw std::invalid_argument("a generic complex needs explicit values");
    Specialization s{c.map.entries, std::nullopt};
    if (c.map.kind == FlaggedMap::Kind::PrimeField) s.prime = c.map.prime;
    return s;
}

}  // namespace

ChainComplex build_complex(const Permutation& w, const FlaggedMap& map) {
    if (map.n < w.size())
        throw std::invalid_argument("flagged map of size " + std::to_string(map.n) + " is smaller than w");
    const auto big = pad(w, map.n - w.size());
    auto g = generic_complex(big);
    return {big, map, g->bases, g->differentials};
}

Matrix<mpq_class> specialize(const Matrix<LinearForm>& d, const Matrix<mpq_class>& values) {
    Matrix<mpq_class> out(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) out(i, j) = d(i, j).evaluate(values);
    return out;
}

bool verify_dd_zero(const ChainComplex& c) {
    const int len = c.length();
    if (c.map.kind != FlaggedMap::Kind::Generic) {
        const auto s = own_specialization(c);
        for (int i = 1; i < len; ++i) {
            const auto a = specialize(c.differentials[i], s.values), b = specialize(c.differentials[i + 1], s.values);
            for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t col = 0; col < b.cols(); ++col) {
                    mpq_class sum = 0;
                    for (std::size_t k = 0; k < a.cols(); ++k) sum += a(r, k) * b(k, col);
                    if (s.prime ? reduce_mod(sum, *s.prime) != 0 : sum != 0) return false;
                }
        }
        return true;
    }
    // Quadratic forms keyed by sorted variable pairs; {0,0} stands for the constant.
    using Pair = std::pair<MapVar, MapVar>;
    for (int i = 1; i < len; ++i) {
        const auto& a = c.differentials[i];
        const auto& b = c.differentials[i + 1];
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t col = 0; col < b.cols(); ++col) {
                std::map<Pair, mpq_class> q;
                for (std::size_t k = 0; k < a.cols(); ++k) {
                    const auto& x = a(r, k);
                    const auto& y = b(k, col);
                    if (x.is_zero() || y.is_zero()) continue;
                    auto terms = [](const LinearForm& f) {
                        std::vector<std::pair<MapVar, mpq_class>> t(f.coefficients().begin(), f.coefficients().end());
                        if (f.constant() != 0) t.emplace_back(MapVar{0, 0}, f.constant());
                        return t;
                    };
                    for (const auto& [vx, cx] : terms(x))
                        for (const auto& [vy, cy] : terms(y)) q[std::minmax(vx, vy)] += cx * cy;
                }
                for (const auto& [key, v] : q)
                    if (v != 0) return false;
            }
    }
    return true;
}

std::vector<std::size_t> homology_ranks(const ChainComplex& c, const Specialization& s) {
    const int len = c.length();
    std::vector<std::size_t> r(static_cast<std::size_t>(len) + 2, 0);
    for (int i = 1; i <= len; ++i) r[i] = specialized_rank(c.differentials[i], s);
    std::vector<std::size_t> h;
    for (int i = 0; i <= len; ++i) h.push_back(c.bases[i].size() - r[i] - r[i + 1]);
    return h;
}

std::vector<std::size_t> homology_ranks(const ChainComplex& c) {
    return homology_ranks(c, own_specialization(c));
}

std::size_t cokernel_fiber_rank(const Permutation& w, const Matrix<mpq_class>& point) {
    const auto c = build_complex(w, FlaggedMap::rational(point));
    return homology_ranks(c).front();
}

long euler_characteristic(const ChainComplex& c) {
    long chi = 0;
    for (int i = 0; i <= c.length(); ++i) chi += (i % 2 ? -1L : 1L) * static_cast<long>(c.bases[i].size());
    return chi;
}

std::vector<std::size_t> term_ranks(const Permutation& w) {
    std::vector<std::size_t> out;
    for (long k : count_bsl_by_degree(w)) out.push_back(static_cast<std::size_t>(k));
    return out;
}

}  // namespace schubert
