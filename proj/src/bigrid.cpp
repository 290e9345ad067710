#include "ellbc/bigrid.hpp"

#include <map>

namespace ellbc::bigrid {

// ---------------------------------------------------------------------------
// field

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % s == 0) return n == s;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // These bases are deterministic for all 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int k = 1; k < r && composite; ++k) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t prime) : p_(prime)
{
    if (prime >= (std::uint64_t{1} << 63)) throw std::invalid_argument("PrimeField: modulus must be below 2^63");
    if (!is_prime(prime)) throw std::invalid_argument("PrimeField: modulus is not prime");
}

FieldElem PrimeField::make(std::int64_t x) const
{
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return {static_cast<std::uint64_t>(r)};
}

FieldElem PrimeField::pow(FieldElem a, std::uint64_t e) const noexcept { return {powmod(a.v, e, p_)}; }

FieldElem PrimeField::inv(FieldElem a) const
{
    if (a.is_zero()) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
}

FieldElem PrimeField::random_nonzero(Rng& rng) const
{
    for (;;) {
        FieldElem x = random(rng);
        if (!x.is_zero()) return x;
    }
}

// ---------------------------------------------------------------------------
// projective points

ProjPoint normalize(const PrimeField& F, FieldElem z, FieldElem w)
{
    if (!w.is_zero()) return {F.mul(z, F.inv(w)), F.make(1)};
    if (!z.is_zero()) return {F.make(1), FieldElem{}};
    throw std::invalid_argument("normalize: (0,0) is not a point");
}

ProjPoint random_point(const PrimeField& F, Rng& rng) { return normalize(F, F.random(rng), F.make(1)); }

FieldElem dot(const PrimeField& F, const ProjPoint& x, const ProjPoint& y)
{
    return F.sub(F.mul(x.z, y.w), F.mul(x.w, y.z));
}

SL2 random_sl2(const PrimeField& F, Rng& rng)
{
    for (;;) {
        FieldElem a = F.random(rng), b = F.random(rng), c = F.random(rng);
        if (a.is_zero()) continue;
        // d = (1 + b c) / a
        FieldElem d = F.mul(F.add(F.make(1), F.mul(b, c)), F.inv(a));
        return {a, b, c, d};
    }
}

ProjPoint apply(const PrimeField& F, const SL2& g, const ProjPoint& x)
{
    return normalize(F, F.add(F.mul(g.a, x.z), F.mul(g.b, x.w)), F.add(F.mul(g.c, x.z), F.mul(g.d, x.w)));
}

// ---------------------------------------------------------------------------
// bigrids

Bigrid::Bigrid(int m, int n, bool extended) : m_(m), n_(n), extended_(extended)
{
    if (m < 1 || n < 1) throw std::invalid_argument("Bigrid: shape must have m, n >= 1");
    data_.resize(static_cast<std::size_t>(2 * n * (m + 1)));
    set_.assign(data_.size(), 0);
}

bool Bigrid::in_domain(int alpha, int i, int j) const noexcept
{
    if (alpha < 0 || alpha > 1 || i < 1 || i > n_ || j < 0 || j > m_) return false;
    if (extended_) return true;
    return alpha == 0 ? j < m_ : j > 0;
}

std::size_t Bigrid::slot(int alpha, int i, int j) const
{
    return static_cast<std::size_t>(((alpha * n_) + (i - 1)) * (m_ + 1) + j);
}

const ProjPoint& Bigrid::operator()(int alpha, int i, int j) const
{
    if (!in_domain(alpha, i, j)) throw std::out_of_range("Bigrid: index outside the domain");
    std::size_t s = slot(alpha, i, j);
    if (!set_[s]) throw std::logic_error("Bigrid: entry not set");
    return data_[s];
}

void Bigrid::set(int alpha, int i, int j, const ProjPoint& x)
{
    if (!in_domain(alpha, i, j)) throw std::out_of_range("Bigrid: index outside the domain");
    std::size_t s = slot(alpha, i, j);
    data_[s] = x;
    set_[s] = 1;
}

Bigrid Bigrid::extend(const PrimeField& F, Rng& rng) const
{
    Bigrid e(m_, n_, true);
    for (int a = 0; a <= 1; ++a)
        for (int i = 1; i <= n_; ++i)
            for (int j = 0; j <= m_; ++j)
                e.set(a, i, j, in_domain(a, i, j) ? (*this)(a, i, j) : random_point(F, rng));
    return e;
}

namespace {

template <class Fn>
Bigrid build(int m, int n, Fn entry)
{
    Bigrid g(m, n);
    for (int a = 0; a <= 1; ++a)
        for (int i = 1; i <= n; ++i)
            for (int j = 0; j <= m; ++j)
                if (g.in_domain(a, i, j)) g.set(a, i, j, entry(a, i, j));
    return g;
}

}  // namespace

std::optional<Kind> parse_kind(std::string_view s)
{
    for (Kind k : {Kind::univariate, Kind::monomial, Kind::schur, Kind::cauchy, Kind::delta, Kind::elliptic_I1,
                   Kind::random})
        if (kind_name(k) == s) return k;
    if (s == "elliptic") return Kind::elliptic_I1;
    return std::nullopt;
}

std::string kind_name(Kind k)
{
    switch (k) {
    case Kind::univariate: return "univariate";
    case Kind::monomial: return "monomial";
    case Kind::schur: return "schur";
    case Kind::cauchy: return "cauchy";
    case Kind::delta: return "delta";
    case Kind::elliptic_I1: return "elliptic_I1";
    case Kind::random: return "random";
    }
    return "unknown";
}

EllipticI1 random_elliptic_params(const PrimeField& F, Rng& rng)
{
    EllipticI1 e;
    e.a = F.random_nonzero(rng);
    e.b = F.random_nonzero(rng);
    e.q = F.random_nonzero(rng);
    e.t = F.random_nonzero(rng);
    e.tau = F.random_nonzero(rng);
    do {
        e.A = F.random(rng);
        e.B = F.random(rng);
        e.C = F.random(rng);
        e.D = F.random(rng);
    } while (F.sub(F.mul(e.A, e.D), F.mul(e.B, e.C)).is_zero());
    return e;
}

ProjPoint elliptic_phi(const PrimeField& F, const EllipticI1& e, FieldElem x)
{
    FieldElem u = F.add(F.mul(x, x), e.tau);
    return normalize(F, F.add(F.mul(e.A, u), F.mul(e.B, x)), F.add(F.mul(e.C, u), F.mul(e.D, x)));
}

Bigrid elliptic_bigrid(const PrimeField& F, int m, int n, const EllipticI1& e)
{
    if (e.tau.is_zero()) throw std::invalid_argument("elliptic_bigrid: tau = 0 makes phi degenerate");
    if (F.sub(F.mul(e.A, e.D), F.mul(e.B, e.C)).is_zero())
        throw std::invalid_argument("elliptic_bigrid: constant phi");
    const FieldElem qi = F.inv(e.q);
    auto mono = [&](FieldElem base, FieldElem q, int qe, int te) {
        return F.mul(F.mul(base, F.pow(q, static_cast<std::uint64_t>(qe))),
                     F.pow(e.t, static_cast<std::uint64_t>(te)));
    };
    return build(m, n, [&](int a, int i, int j) {
        FieldElem x = a == 0 ? mono(e.a, e.q, j, n - i) : mono(e.b, qi, j, i - 1);
        return elliptic_phi(F, e, x);
    });
}

Bigrid cauchy_bigrid(int m, int n, const std::vector<ProjPoint>& eta)
{
    if (eta.size() != static_cast<std::size_t>((n + 1) * m)) throw std::invalid_argument("cauchy_bigrid: eta size");
    auto at = [&](int i, int j) { return eta[static_cast<std::size_t>(i * m + j)]; };
    return build(m, n, [&](int a, int i, int j) { return a == 0 ? at(i, j) : at(i - 1, j - 1); });
}

Bigrid make_bigrid(const PrimeField& F, Kind kind, int m, int n, Rng& rng)
{
    auto rnd = [&] { return random_point(F, rng); };
    switch (kind) {
    case Kind::univariate:
        if (n != 1) throw std::invalid_argument("make_bigrid: univariate bigrids have n = 1");
        [[fallthrough]];
    case Kind::random:
        return build(m, n, [&](int, int, int) { return rnd(); });
    case Kind::monomial: {
        std::vector<ProjPoint> g0(static_cast<std::size_t>(2 * (m + 1)));
        for (auto& x : g0) x = rnd();
        return build(m, n, [&](int a, int, int j) { return g0[static_cast<std::size_t>(a * (m + 1) + j)]; });
    }
    case Kind::schur: {
        const int M = m + n - 1;
        std::vector<ProjPoint> g0(static_cast<std::size_t>(2 * (M + 1)));
        for (auto& x : g0) x = rnd();
        return build(m, n, [&](int a, int i, int j) {
            return g0[static_cast<std::size_t>(a * (M + 1) + j + n - i)];
        });
    }
    case Kind::cauchy: {
        std::vector<ProjPoint> eta(static_cast<std::size_t>((n + 1) * m));
        for (auto& x : eta) x = rnd();
        return cauchy_bigrid(m, n, eta);
    }
    case Kind::delta: {
        std::vector<ProjPoint> g0(static_cast<std::size_t>(n * (m + 1)));
        for (auto& x : g0) x = rnd();
        return build(m, n, [&](int, int i, int j) { return g0[static_cast<std::size_t>((i - 1) * (m + 1) + j)]; });
    }
    case Kind::elliptic_I1:
        return elliptic_bigrid(F, m, n, random_elliptic_params(F, rng));
    }
    throw std::invalid_argument("make_bigrid: unknown kind");
}

Bigrid truncate_right(const Bigrid& g)
{
    if (g.m() < 2) throw std::invalid_argument("truncate_right: needs m >= 2");
    return build(g.m() - 1, g.n(), [&](int a, int i, int j) { return g(a, i, j); });
}

Bigrid truncate_down(const Bigrid& g)
{
    if (g.n() < 2) throw std::invalid_argument("truncate_down: needs n >= 2");
    return build(g.m(), g.n() - 1, [&](int a, int i, int j) { return g(a, i, j); });
}

Bigrid truncate_left(const Bigrid& g)
{
    if (g.m() < 2) throw std::invalid_argument("truncate_left: needs m >= 2");
    return build(g.m() - 1, g.n(), [&](int a, int i, int j) { return g(a, i, j + 1); });
}

Bigrid truncate_up(const Bigrid& g)
{
    if (g.n() < 2) throw std::invalid_argument("truncate_up: needs n >= 2");
    return build(g.m(), g.n() - 1, [&](int a, int i, int j) { return g(a, i + 1, j); });
}

Bigrid complement_bigrid(const Bigrid& g)
{
    const int m = g.m(), n = g.n();
    return build(m, n, [&](int a, int i, int j) { return g(1 - a, n + 1 - i, m - j); });
}

Bigrid transform(const PrimeField& F, const Bigrid& g, const SL2& s)
{
    return build(g.m(), g.n(), [&](int a, int i, int j) { return apply(F, s, g(a, i, j)); });
}

bool is_regular(const PrimeField& F, const Bigrid& g)
{
    const int m = g.m(), n = g.n();
    for (int a = 0; a <= 1; ++a)
        for (int i = 1; i <= n; ++i)
            for (int j = 0; j <= m; ++j) {
                if (!g.in_domain(a, i, j)) continue;
                for (int b = 0; b <= 1; ++b)
                    for (int i2 = 1; i2 <= i; ++i2)
                        for (int j2 = j + 1; j2 <= m; ++j2)
                            if (g.in_domain(b, i2, j2) && dot(F, g(a, i, j), g(b, i2, j2)).is_zero()) return false;
            }
    return true;
}

int gamma_split(const Partition& lambda, const Partition& mu, int m, int n)
{
    int l0 = 0, l1 = 0;
    for (int i = 1; i <= n; ++i) {
        if (mu[i] != lambda[i]) l0 = i;
        if (mu[i] == m) l1 = i;
    }
    if (l0 == 0 || mu[l0] < lambda[l0]) return l1;
    return l0;
}

std::vector<ProjPoint> gamma_point(const Bigrid& g, const Partition& lambda, const Partition& mu)
{
    const int l = gamma_split(lambda, mu, g.m(), g.n());
    std::vector<ProjPoint> x;
    for (int i = 1; i <= g.n(); ++i) x.push_back(g(i <= l ? 1 : 0, i, mu[i]));
    return x;
}

// ---------------------------------------------------------------------------
// symmetric polynomials

std::vector<FieldElem> elementary(const PrimeField& F, std::span<const ProjPoint> x)
{
    std::vector<FieldElem> e{F.make(1)};
    for (const auto& pt : x) {
        std::vector<FieldElem> next(e.size() + 1);
        for (std::size_t i = 0; i < e.size(); ++i) {
            next[i] = F.add(next[i], F.mul(e[i], pt.w));
            next[i + 1] = F.add(next[i + 1], F.mul(e[i], pt.z));
        }
        e = std::move(next);
    }
    return e;
}

const std::vector<std::vector<int>>& SymPolynomial::monomials(int m, int n)
{
    thread_local std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    auto [it, fresh] = cache.try_emplace({m, n});
    if (fresh) {
        std::vector<int> k(static_cast<std::size_t>(n + 1), 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == n) {
                k[static_cast<std::size_t>(pos)] = left;
                it->second.push_back(k);
                return;
            }
            for (int v = left; v >= 0; --v) {
                k[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1, left - v);
            }
        };
        rec(rec, 0, m);
    }
    return it->second;
}

std::vector<FieldElem> SymPolynomial::monomial_row(const PrimeField& F, int m, std::span<const ProjPoint> x)
{
    const int n = static_cast<int>(x.size());
    std::vector<FieldElem> e = elementary(F, x);
    // powers[i][k] = e_i^k
    std::vector<std::vector<FieldElem>> powers(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        powers[i].push_back(F.make(1));
        for (int k = 1; k <= m; ++k) powers[i].push_back(F.mul(powers[i].back(), e[i]));
    }
    std::vector<FieldElem> row;
    for (const auto& k : monomials(m, n)) {
        FieldElem v = F.make(1);
        for (std::size_t i = 0; i < k.size(); ++i) v = F.mul(v, powers[i][static_cast<std::size_t>(k[i])]);
        row.push_back(v);
    }
    return row;
}

SymPolynomial::SymPolynomial(int m, int n) : m_(m), n_(n), coeffs_(monomials(m, n).size()) {}

SymPolynomial::SymPolynomial(int m, int n, std::vector<FieldElem> coeffs) : m_(m), n_(n), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != monomials(m, n).size()) throw std::invalid_argument("SymPolynomial: coefficient count");
}

FieldElem SymPolynomial::operator()(const PrimeField& F, std::span<const ProjPoint> x) const
{
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("SymPolynomial: wrong number of points");
    std::vector<FieldElem> row = monomial_row(F, m_, x);
    FieldElem s{};
    for (std::size_t i = 0; i < row.size(); ++i) s = F.add(s, F.mul(row[i], coeffs_[i]));
    return s;
}

namespace {

std::size_t monomial_index(int m, int n, const std::vector<int>& k)
{
    const auto& all = SymPolynomial::monomials(m, n);
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == k) return i;
    throw std::logic_error("monomial_index: not found");
}

}  // namespace

SymPolynomial multiply_en(const SymPolynomial& p)
{
    const int m = p.m() + 1, n = p.n();
    SymPolynomial out(m, n);
    const auto& src = SymPolynomial::monomials(p.m(), n);
    for (std::size_t i = 0; i < src.size(); ++i) {
        std::vector<int> k = src[i];
        ++k[static_cast<std::size_t>(n)];
        out.coeffs()[monomial_index(m, n, k)] = p.coeffs()[i];
    }
    return out;
}

SymPolynomial restrict_last(const SymPolynomial& p)
{
    const int m = p.m(), n = p.n();
    if (n < 1) throw std::invalid_argument("restrict_last: no variable to remove");
    SymPolynomial out(m, n - 1);
    const auto& src = SymPolynomial::monomials(m, n);
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i][static_cast<std::size_t>(n)] != 0) continue;
        std::vector<int> k(src[i].begin(), src[i].end() - 1);
        out.coeffs()[monomial_index(m, n - 1, k)] = p.coeffs()[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// exact linear algebra

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const PrimeField& F, std::vector<std::vector<FieldElem>>& a, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t sel = r;
        while (sel < a.size() && a[sel][c].is_zero()) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[r], a[sel]);
        FieldElem s = F.inv(a[r][c]);
        for (auto& v : a[r]) v = F.mul(v, s);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            FieldElem f = a[i][c];
            for (std::size_t k = 0; k < cols; ++k) a[i][k] = F.sub(a[i][k], F.mul(f, a[r][k]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<FieldElem>> nullspace(const PrimeField& F, std::vector<std::vector<FieldElem>> rows,
                                              std::size_t cols)
{
    std::vector<std::size_t> piv = rref(F, rows, cols);
    std::vector<char> is_pivot(cols, 0);
    for (auto c : piv) is_pivot[c] = 1;
    std::vector<std::vector<FieldElem>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElem> v(cols);
        v[free] = F.make(1);
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(rows[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const PrimeField& F, std::vector<std::vector<FieldElem>> rows, std::size_t cols)
{
    return rref(F, rows, cols).size();
}

// ---------------------------------------------------------------------------
// interpolation

SymPolynomial quasi_interp_solve(const PrimeField& F, const Bigrid& g, const Partition& lambda)
{
    const int m = g.m(), n = g.n();
    if (!contains(lambda, rectangle(m, n))) throw std::invalid_argument("quasi_interp_solve: lambda not in m^n");
    const std::size_t N = SymPolynomial::monomials(m, n).size();
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& mu : enumerate(m, n)) {
        if (mu == lambda) continue;
        rows.push_back(SymPolynomial::monomial_row(F, m, gamma_point(g, lambda, mu)));
    }
    auto ns = nullspace(F, std::move(rows), N);
    if (ns.size() != 1) throw NotRegularError("quasi_interp_solve: solution space is not one-dimensional");
    SymPolynomial p(m, n, std::move(ns.front()));
    FieldElem at = p(F, gamma_point(g, lambda, lambda));
    if (at.is_zero()) throw NotRegularError("quasi_interp_solve: vanishes at its own index point");
    FieldElem s = F.inv(at);
    for (auto& c : p.coeffs()) c = F.mul(c, s);
    return p;
}

bool satisfies_balanced(const PrimeField& F, const Bigrid& ext, const SymPolynomial& p, const Partition& lambda)
{
    const int m = ext.m(), n = ext.n();
    std::vector<ProjPoint> x(static_cast<std::size_t>(n));
    for (const auto& mu : enumerate(m, n)) {
        if (!contains(lambda, mu)) {
            for (int i = 1; i <= n; ++i) x[static_cast<std::size_t>(i - 1)] = ext(0, i, mu[i]);
            if (!p(F, x).is_zero()) return false;
        }
        if (!contains(mu, lambda)) {
            for (int i = 1; i <= n; ++i) x[static_cast<std::size_t>(i - 1)] = ext(1, i, mu[i]);
            if (!p(F, x).is_zero()) return false;
        }
    }
    return true;
}

PerfectionReport perfection_check(const PrimeField& F, const Bigrid& g, int trials, Rng& rng)
{
    if (trials < 1) throw std::invalid_argument("perfection_check: trials must be positive");
    PerfectionReport rep;
    rep.trials = trials;
    rep.regularity_ok = is_regular(F, g);
    for (const auto& lambda : enumerate(g.m(), g.n())) {
        SymPolynomial p(g.m(), g.n());
        try {
            p = quasi_interp_solve(F, g, lambda);
        } catch (const NotRegularError& e) {
            rep.failing_lambda = lambda;
            rep.note = e.what();
            return rep;
        }
        for (int k = 0; k < trials; ++k) {
            if (!satisfies_balanced(F, g.extend(F, rng), p, lambda)) {
                rep.failing_lambda = lambda;
                rep.note = "balanced vanishing condition violated";
                return rep;
            }
        }
    }
    rep.pass = true;
    return rep;
}

FieldElem univariate_product(const PrimeField& F, const Bigrid& g, int j, const ProjPoint& x)
{
    FieldElem r = F.make(1);
    for (int i = 0; i < j; ++i) r = F.mul(r, dot(F, x, g(0, 1, i)));
    for (int i = j + 1; i <= g.m(); ++i) r = F.mul(r, dot(F, x, g(1, 1, i)));
    return r;
}

FieldElem cauchy_product(const PrimeField& F, const Bigrid& g, const Partition& lambda,
                         std::span<const ProjPoint> x)
{
    const Partition lc = conjugate(lambda);
    // eta(k, j) = gamma(0,k,j) for k >= 1 and gamma(1,1,j+1) for k = 0
    auto eta = [&](int k, int j) { return k >= 1 ? g(0, k, j) : g(1, 1, j + 1); };
    FieldElem r = F.make(1);
    for (const auto& xi : x)
        for (int j = 1; j <= g.m(); ++j) r = F.mul(r, dot(F, xi, eta(lc[j], j - 1)));
    return r;
}

}  // namespace ellbc::bigrid
