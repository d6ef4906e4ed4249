#include "amalgam/polynomial.hpp"

#include "amalgam/algebra.hpp"

#include <algorithm>

namespace amalgam {

Poly poly_normalize(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

std::size_t poly_degree(const Poly& p) { return p.empty() ? 0 : p.size() - 1; }

bool poly_is_zero(const Poly& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c.is_zero(); });
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_normalize(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return poly_normalize(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    Poly bb = poly_normalize(b);
    if (bb.empty()) throw Error("polynomial division by zero");
    Poly rem = poly_normalize(a);
    if (rem.size() < bb.size()) return {{}, rem};
    Poly quot(rem.size() - bb.size() + 1);
    Rational lead_inv = bb.back().reciprocal();
    for (std::size_t k = quot.size(); k-- > 0;) {
        if (rem.size() < bb.size() + k) continue;
        Rational c = rem[bb.size() - 1 + k] * lead_inv;
        quot[k] = c;
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < bb.size(); ++i) rem[i + k] -= c * bb[i];
    }
    return {poly_normalize(std::move(quot)), poly_normalize(std::move(rem))};
}

bool poly_divides(const Poly& b, const Poly& a) {
    return poly_is_zero(poly_divmod(a, b).second);
}

Poly poly_monic(const Poly& p) {
    Poly q = poly_normalize(p);
    if (q.empty()) return q;
    Rational inv = q.back().reciprocal();
    for (auto& c : q) c *= inv;
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = poly_normalize(a), y = poly_normalize(b);
    while (!y.empty()) {
        Poly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return poly_monic(x);
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * p[i];
    return poly_normalize(std::move(d));
}

Poly poly_squarefree_part(const Poly& p) {
    Poly q = poly_normalize(p);
    if (poly_degree(q) < 2) return poly_monic(q);
    Poly g = poly_gcd(q, poly_derivative(q));
    return poly_monic(poly_divmod(q, g).first);
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational v;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

namespace {

/// Primitive integer form (content removed, positive leading coefficient).
std::vector<mpz_class> primitive_integer(const Poly& p) {
    mpz_class lcm_den(1);
    for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(p.size());
    for (const auto& c : p) z.push_back(c.num() * (lcm_den / c.den()));
    mpz_class content(0);
    for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content != 0)
        for (auto& c : z) c /= content;
    if (!z.empty() && z.back() < 0)
        for (auto& c : z) c = -c;
    return z;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n, std::size_t budget) {
    mpz_class a = ::abs(n);
    if (a == 0) throw Error("divisors of zero requested");
    std::vector<mpz_class> divs;
    mpz_class d(1);
    while (d * d <= a) {
        if (a % d == 0) {
            divs.push_back(d);
            if (d * d != a) divs.push_back(a / d);
            if (divs.size() > budget) throw Error("divisor enumeration budget exceeded");
        }
        ++d;
        if (d > 2000000) throw Error("divisor enumeration budget exceeded");
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

std::vector<Rational> poly_rational_roots(const Poly& p) {
    Poly q = poly_normalize(p);
    if (q.empty()) throw Error("rational roots of the zero polynomial");
    std::vector<Rational> roots;
    // factor out x = 0
    std::size_t shift = 0;
    while (shift < q.size() && q[shift].is_zero()) ++shift;
    if (shift > 0) {
        roots.emplace_back(0);
        q.erase(q.begin(), q.begin() + static_cast<long>(shift));
    }
    if (poly_degree(q) >= 1) {
        std::vector<mpz_class> z = primitive_integer(q);
        for (const auto& pn : positive_divisors(z.front(), 4096))
            for (const auto& qd : positive_divisors(z.back(), 4096)) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), pn.get_mpz_t(), qd.get_mpz_t());
                if (g != 1) continue;
                Rational cand{mpq_class(pn, qd)};
                if (poly_eval(q, cand).is_zero()) roots.push_back(cand);
                if (poly_eval(q, -cand).is_zero()) roots.push_back(-cand);
            }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace {

/// Kronecker search for a proper factor of degree <= max_deg; empty
/// result means none exists.
Poly kronecker_factor(const std::vector<mpz_class>& z, std::size_t deg) {
    for (std::size_t k = 2; k <= deg / 2; ++k) {
        // evaluation points 0..k
        std::vector<Rational> points, values;
        Poly pq(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) pq[i] = Rational(mpq_class(z[i]));
        for (std::size_t i = 0; i <= k; ++i) {
            points.emplace_back(static_cast<long>(i));
            values.push_back(poly_eval(pq, points.back()));
        }
        std::vector<std::vector<mpz_class>> divisor_sets;
        std::size_t combinations = 1;
        for (const auto& v : values) {
            auto divs = positive_divisors(v.num(), 512);
            std::vector<mpz_class> with_sign;
            for (const auto& d : divs) {
                with_sign.push_back(d);
                with_sign.push_back(-d);
            }
            combinations *= with_sign.size();
            if (combinations > 200000) throw Error("factorization budget exceeded");
            divisor_sets.push_back(std::move(with_sign));
        }
        std::vector<std::size_t> idx(k + 1, 0);
        while (true) {
            // Lagrange interpolation through (i, divisor_i)
            Poly cand{};
            for (std::size_t i = 0; i <= k; ++i) {
                Poly term{Rational(mpq_class(divisor_sets[i][idx[i]]))};
                for (std::size_t j = 0; j <= k; ++j) {
                    if (j == i) continue;
                    Rational denom = points[i] - points[j];
                    term = poly_mul(term, Poly{-points[j] / denom, Rational(1) / denom});
                }
                cand = poly_add(cand, term);
            }
            if (poly_degree(cand) == k && !cand.empty()) {
                bool integral = true;
                for (const auto& c : cand) integral = integral && c.is_integer();
                if (integral && poly_divides(cand, pq)) return poly_monic(cand);
            }
            std::size_t pos = 0;
            while (pos <= k && ++idx[pos] == divisor_sets[pos].size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos > k) break;
        }
    }
    return {};
}

}  // namespace

Poly poly_irreducible_factor(const Poly& p) {
    Poly q = poly_monic(poly_normalize(p));
    std::size_t deg = poly_degree(q);
    if (deg < 2) throw Error("irreducible factor: degree below 2");
    if (deg <= 3) return q;  // no rational roots => irreducible
    std::vector<mpz_class> z = primitive_integer(q);
    Poly f = kronecker_factor(z, deg);
    if (f.empty()) return q;
    // recurse into the smaller factor
    Poly rest = poly_divmod(q, f).first;
    Poly small = poly_degree(f) <= poly_degree(rest) ? f : rest;
    if (poly_degree(small) <= 3) {
        if (poly_rational_roots(small).empty()) return poly_monic(small);
        throw Error("irreducible factor: unexpected rational root in factor");
    }
    return poly_irreducible_factor(small);
}

std::string poly_str(const Poly& p, const std::string& var) {
    Poly q = poly_normalize(p);
    if (q.empty()) return "0";
    std::string out;
    for (std::size_t i = q.size(); i-- > 0;) {
        if (q[i].is_zero()) continue;
        Rational c = q[i];
        bool first = out.empty();
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        Rational a = c.abs();
        if (i == 0 || !a.is_one()) out += a.str();
        if (i > 0) {
            if (!a.is_one()) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace amalgam
