#include "dyndeg/rational.hpp"

#include "dyndeg/error.hpp"

#include <random>
#include <sstream>

namespace dyndeg {

namespace {

constexpr std::uint64_t kJacobianPrime = 2305843009213693951ULL; // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    std::uint64_t r = 1, e = m - 2;
    while (e) {
        if (e & 1u)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

int rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[r]);
        const std::uint64_t inv = invmod(m[r][c], p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0)
                continue;
            const std::uint64_t f = mulmod(m[i][c], inv, p);
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = submod(m[i][j], mulmod(f, m[r][j], p), p);
        }
        ++r;
        ++rank;
    }
    return rank;
}

const char kBlockLetters[] = "xyzuvwabcdefghijklmnopqrst";

} // namespace

std::vector<int> variable_offsets(const Space &space) {
    std::vector<int> off{0};
    for (int n : space.factors())
        off.push_back(off.back() + n + 1);
    return off;
}

std::vector<std::string> variable_names(const Space &space) {
    std::vector<std::string> names;
    const auto &f = space.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::string stem = i < sizeof(kBlockLetters) - 1
                                     ? std::string(1, kBlockLetters[i])
                                     : "f" + std::to_string(i) + "_";
        for (int t = 0; t <= f[i]; ++t)
            names.push_back(stem + std::to_string(t));
    }
    return names;
}

std::vector<Polynomial> reduce_tuple(std::vector<Polynomial> tuple) {
    if (tuple.empty())
        throw InvalidArgument("reduce_tuple: empty tuple");
    Polynomial g(tuple.front().nvars());
    for (const auto &p : tuple) {
        g = gcd(g, p);
        if (g.is_constant() && !g.is_zero() && g.leading_coeff() == 1)
            return tuple;
    }
    if (g.is_zero())
        throw DegenerateComposition("component tuple is identically zero");
    for (auto &p : tuple)
        p = divide_exact(p, g);
    return tuple;
}

RationalMap::RationalMap(Space space, std::vector<std::vector<Polynomial>> components)
    : space_(std::move(space)), components_(std::move(components)) {
    const auto &factors = space_.factors();
    const auto off = variable_offsets(space_);
    const int nv = off.back();
    if (components_.size() != factors.size())
        throw InvalidArgument("RationalMap: expected " + std::to_string(factors.size()) +
                              " components, got " + std::to_string(components_.size()));
    for (std::size_t i = 0; i < components_.size(); ++i) {
        auto &tuple = components_[i];
        const std::string where = "RationalMap: component " + std::to_string(i + 1);
        if (static_cast<int>(tuple.size()) != factors[i] + 1)
            throw InvalidArgument(where + " must have " + std::to_string(factors[i] + 1) +
                                  " polynomials");
        std::vector<int> multideg;
        for (const auto &p : tuple) {
            if (p.nvars() != nv)
                throw InvalidArgument(where + ": polynomial has " + std::to_string(p.nvars()) +
                                      " variables, expected " + std::to_string(nv));
            if (p.is_zero())
                continue;
            std::vector<int> d;
            for (std::size_t j = 0; j < factors.size(); ++j) {
                if (!p.homogeneous_in(off[j], off[j + 1]))
                    throw InvalidArgument(where + " is not homogeneous in the variables of factor " +
                                          std::to_string(j + 1));
                d.push_back(p.block_degree(off[j], off[j + 1]));
            }
            if (!multideg.empty() && d != multideg)
                throw InvalidArgument(where + ": polynomials have different multidegrees");
            multideg = d;
        }
        if (multideg.empty())
            throw DegenerateComposition(where + " is identically zero");
        tuple = reduce_tuple(std::move(tuple));
    }
}

RationalMap RationalMap::identity(const Space &space) {
    const auto off = variable_offsets(space);
    std::vector<std::vector<Polynomial>> comps;
    for (std::size_t i = 0; i < space.factors().size(); ++i) {
        std::vector<Polynomial> tuple;
        for (int v = off[i]; v < off[i + 1]; ++v)
            tuple.push_back(Polynomial::variable(off.back(), v));
        comps.push_back(std::move(tuple));
    }
    return RationalMap(space, std::move(comps));
}

RationalMap RationalMap::parse(const Space &space,
                               const std::vector<std::vector<std::string>> &components) {
    const auto names = variable_names(space);
    std::vector<std::vector<Polynomial>> comps;
    for (const auto &tuple : components) {
        std::vector<Polynomial> polys;
        for (const auto &s : tuple)
            polys.push_back(parse_polynomial(s, names));
        comps.push_back(std::move(polys));
    }
    return RationalMap(space, std::move(comps));
}

int RationalMap::nvars() const { return variable_offsets(space_).back(); }

DegreeMatrix RationalMap::multidegrees() const {
    const auto off = variable_offsets(space_);
    DegreeMatrix d;
    for (const auto &tuple : components_) {
        std::vector<int> row(space_.factors().size(), 0);
        for (const auto &p : tuple) {
            if (p.is_zero())
                continue;
            for (std::size_t j = 0; j < row.size(); ++j)
                row[j] = p.block_degree(off[j], off[j + 1]);
            break;
        }
        d.push_back(std::move(row));
    }
    return d;
}

RationalMap RationalMap::base_map() const {
    const int l = space_.base_factors();
    const Space base = space_.base_space();
    const auto off = variable_offsets(space_);
    const int base_vars = off[static_cast<std::size_t>(l)];
    std::vector<std::vector<Polynomial>> comps;
    for (int i = 0; i < l; ++i) {
        std::vector<Polynomial> tuple;
        for (const auto &p : components_[static_cast<std::size_t>(i)]) {
            Polynomial q(base_vars);
            for (const auto &[e, c] : p.terms()) {
                for (std::size_t v = static_cast<std::size_t>(base_vars); v < e.size(); ++v)
                    if (e[v] != 0)
                        throw FibrationError(
                            "base_map: base component involves a fiber variable (not a skew product)");
                q.add_term(Monomial(e.begin(), e.begin() + base_vars), c);
            }
            tuple.push_back(std::move(q));
        }
        comps.push_back(std::move(tuple));
    }
    return RationalMap(base, std::move(comps));
}

std::string RationalMap::to_string() const {
    const auto names = variable_names(space_);
    std::ostringstream os;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        os << (i ? ", " : "") << "(";
        for (std::size_t t = 0; t < components_[i].size(); ++t)
            os << (t ? " : " : "") << components_[i][t].to_string(names);
        os << ")";
    }
    return os.str();
}

RationalMap compose(const RationalMap &f, const RationalMap &g) {
    if (!f.space().same_product(g.space()))
        throw InvalidArgument("compose: maps live on different spaces");
    std::vector<Polynomial> images;
    for (const auto &tuple : g.components())
        for (const auto &p : tuple)
            images.push_back(p);
    std::vector<std::vector<Polynomial>> comps;
    for (std::size_t i = 0; i < f.components().size(); ++i) {
        std::vector<Polynomial> tuple;
        for (const auto &p : f.components()[i])
            tuple.push_back(p.substitute(images));
        bool all_zero = true;
        for (const auto &p : tuple)
            all_zero = all_zero && p.is_zero();
        if (all_zero)
            throw DegenerateComposition("compose: component " + std::to_string(i + 1) +
                                        " vanishes identically (indeterminacy collapse)");
        comps.push_back(std::move(tuple));
    }
    return RationalMap(f.space(), std::move(comps));
}

CohClass pullback_omega(const Space &space, const DegreeMatrix &d) {
    CohClass c(space, 1);
    for (const auto &row : d)
        for (std::size_t j = 0; j < row.size(); ++j)
            c += CohClass::generator(space, static_cast<int>(j)) * Integer(row[j]);
    return c;
}

IterateResult iterate_multidegrees(const RationalMap &f, int n_max, int degree_cap) {
    if (n_max < 1)
        throw InvalidArgument("iterate_multidegrees: N must be at least 1");
    const Space &space = f.space();
    const std::size_t m = space.factors().size();
    const DegreeMatrix df = f.multidegrees();

    IterateResult out;
    DegreeMatrix id(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        id[i][i] = 1;
    out.degrees.push_back(id);
    out.lambda1.push_back(mass(pullback_omega(space, id)));

    RationalMap current = RationalMap::identity(space);
    for (int n = 1; n <= n_max; ++n) {
        const DegreeMatrix &prev = out.degrees.back();
        for (std::size_t i = 0; i < m; ++i) {
            long total = 0;
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t t = 0; t < m; ++t)
                    total += static_cast<long>(df[i][j]) * prev[j][t];
            if (total > degree_cap) {
                out.truncated = true;
                out.truncation_reason = "predicted degree " + std::to_string(total) +
                                        " of component " + std::to_string(i + 1) + " at n = " +
                                        std::to_string(n) + " exceeds cap " +
                                        std::to_string(degree_cap);
                return out;
            }
        }
        current = compose(f, current);
        out.degrees.push_back(current.multidegrees());
        out.lambda1.push_back(mass(pullback_omega(space, out.degrees.back())));
        out.reached = n;
    }
    return out;
}

bool validate_skew(const RationalMap &f) {
    const int l = f.space().base_factors();
    const auto off = variable_offsets(f.space());
    const auto base_vars = static_cast<std::size_t>(off[static_cast<std::size_t>(l)]);
    for (int i = 0; i < l; ++i)
        for (const auto &p : f.components()[static_cast<std::size_t>(i)])
            for (const auto &[e, c] : p.terms())
                for (std::size_t v = base_vars; v < e.size(); ++v)
                    if (e[v] != 0)
                        return false;
    return true;
}

Integer fiber_degree_from(const Space &space, const DegreeMatrix &d) {
    const int k = space.dim();
    const int dim_y = space.base_dim();
    return pair(mul(pullback_omega(space, d), base_pullback_power(space, dim_y)),
                kaehler_power(space, k - dim_y - 1));
}

namespace {
void require_skew(const RationalMap &f) {
    if (!validate_skew(f))
        throw FibrationError("fiber_degree: map is not a skew product for the declared fibration");
}
} // namespace

Integer fiber_degree(const RationalMap &f, int n, int degree_cap) {
    require_skew(f);
    if (n < 0)
        throw InvalidArgument("fiber_degree: n must be nonnegative");
    if (n == 0) {
        DegreeMatrix id(f.space().factors().size(),
                        std::vector<int>(f.space().factors().size(), 0));
        for (std::size_t i = 0; i < id.size(); ++i)
            id[i][i] = 1;
        return fiber_degree_from(f.space(), id);
    }
    const IterateResult it = iterate_multidegrees(f, n, degree_cap);
    if (it.reached < n)
        throw ComputationError("fiber_degree: " + it.truncation_reason);
    return fiber_degree_from(f.space(), it.degrees.back());
}

std::vector<Integer> fiber_degree_sequence(const RationalMap &f, const IterateResult &it) {
    require_skew(f);
    std::vector<Integer> out;
    for (const auto &d : it.degrees)
        out.push_back(fiber_degree_from(f.space(), d));
    return out;
}

DominanceCheck check_dominance(const RationalMap &f, std::uint64_t seed) {
    const std::uint64_t p = kJacobianPrime;
    const Space &space = f.space();
    const auto off = variable_offsets(space);
    const int nv = off.back();
    const int k = space.dim();

    // affine source coordinates: every variable except the first of each block
    std::vector<int> coords;
    for (std::size_t j = 0; j + 1 < off.size(); ++j)
        for (int v = off[j] + 1; v < off[j + 1]; ++v)
            coords.push_back(v);

    std::vector<std::vector<std::vector<Polynomial>>> partials; // [i][t][u]
    for (const auto &tuple : f.components()) {
        std::vector<std::vector<Polynomial>> per_poly;
        for (const auto &poly : tuple) {
            std::vector<Polynomial> ds;
            for (int v : coords)
                ds.push_back(poly.derivative(v));
            per_poly.push_back(std::move(ds));
        }
        partials.push_back(std::move(per_poly));
    }

    std::mt19937_64 rng(seed);
    DominanceCheck out;
    int good_points = 0;
    for (int attempt = 0; attempt < 30 && good_points < 3; ++attempt) {
        std::vector<std::uint64_t> point(static_cast<std::size_t>(nv));
        for (auto &x : point)
            x = rng() % 1000003 + 1;
        for (std::size_t j = 0; j + 1 < off.size(); ++j)
            point[static_cast<std::size_t>(off[j])] = 1;

        std::vector<std::vector<std::uint64_t>> jac;
        bool degenerate = false;
        for (std::size_t i = 0; i < f.components().size() && !degenerate; ++i) {
            const auto &tuple = f.components()[i];
            std::vector<std::uint64_t> vals;
            for (const auto &poly : tuple)
                vals.push_back(poly.eval_mod(point, p));
            std::size_t chart = 0;
            while (chart < vals.size() && vals[chart] == 0)
                ++chart;
            if (chart == vals.size()) {
                degenerate = true;
                break;
            }
            for (std::size_t t = 0; t < tuple.size(); ++t) {
                if (t == chart)
                    continue;
                std::vector<std::uint64_t> row;
                for (std::size_t u = 0; u < coords.size(); ++u) {
                    const std::uint64_t dt = partials[i][t][u].eval_mod(point, p);
                    const std::uint64_t dc = partials[i][chart][u].eval_mod(point, p);
                    row.push_back(submod(mulmod(dt, vals[chart], p), mulmod(vals[t], dc, p), p));
                }
                jac.push_back(std::move(row));
            }
        }
        if (degenerate) {
            ++out.degenerate_draws;
            continue;
        }
        ++good_points;
        ++out.points_tried;
        if (rank_mod(jac, p) == k) {
            out.full_rank = true;
            break;
        }
    }
    return out;
}

} // namespace dyndeg
