#include "dyndeg/cohomology.hpp"

#include "dyndeg/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dyndeg {

Space::Space(std::vector<int> factors, std::optional<int> base_factors)
    : factors_(std::move(factors)), base_factors_(base_factors) {
    if (factors_.empty())
        throw InvalidArgument("Space: at least one factor is required");
    for (int n : factors_)
        if (n < 1)
            throw InvalidArgument("Space: factor dimensions must be positive");
    dim_ = std::accumulate(factors_.begin(), factors_.end(), 0);
    if (base_factors_ && (*base_factors_ <= 0 || *base_factors_ >= num_factors()))
        throw FibrationError("Space: fibration must satisfy 0 < l < m (got l = " +
                             std::to_string(*base_factors_) + ", m = " +
                             std::to_string(num_factors()) + ")");
}

Space Space::lines(int k, std::optional<int> l) {
    if (k < 1)
        throw InvalidArgument("Space: k must be positive");
    return Space(std::vector<int>(static_cast<std::size_t>(k), 1), l);
}

int Space::base_factors() const {
    if (!base_factors_)
        throw FibrationError("Space: no fibration declared");
    return *base_factors_;
}

int Space::base_dim() const {
    const int l = base_factors();
    return std::accumulate(factors_.begin(), factors_.begin() + l, 0);
}

Space Space::base_space() const {
    const int l = base_factors();
    return Space(std::vector<int>(factors_.begin(), factors_.begin() + l));
}

std::string Space::describe() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        os << (i ? " x " : "") << "P^" << factors_[i];
    if (base_factors_)
        os << " (base: first " << *base_factors_ << ")";
    return os.str();
}

CohClass::CohClass(Space space, int degree) : space_(std::move(space)), degree_(degree) {
    if (degree_ < 0 || degree_ > space_.dim())
        throw InvalidArgument("CohClass: degree " + std::to_string(degree_) +
                              " outside [0, " + std::to_string(space_.dim()) + "]");
}

CohClass CohClass::unit(const Space &space) {
    CohClass c(space, 0);
    c.add_term(Exponent(space.factors().size(), 0), 1);
    return c;
}

CohClass CohClass::generator(const Space &space, int factor) {
    if (factor < 0 || factor >= space.num_factors())
        throw InvalidArgument("CohClass: generator index out of range");
    CohClass c(space, 1);
    Exponent e(space.factors().size(), 0);
    e[static_cast<std::size_t>(factor)] = 1;
    c.add_term(e, 1);
    return c;
}

void CohClass::check_exponent(const Exponent &e) const {
    if (e.size() != space_.factors().size())
        throw InvalidArgument("CohClass: exponent length mismatch");
    int total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > space_.factors()[i])
            throw InvalidArgument("CohClass: exponent outside factor bounds");
        total += e[i];
    }
    if (total != degree_)
        throw InvalidArgument("CohClass: exponent degree does not match class degree");
}

Integer CohClass::coefficient(const Exponent &e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

void CohClass::add_term(const Exponent &e, const Integer &c) {
    check_exponent(e);
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

bool CohClass::is_effective() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const auto &kv) { return kv.second >= 0; });
}

CohClass &CohClass::operator+=(const CohClass &other) {
    if (!space_.same_product(other.space_) || degree_ != other.degree_)
        throw InvalidArgument("CohClass: sum of classes of different spaces or degrees");
    for (const auto &[e, c] : other.coeffs_)
        add_term(e, c);
    return *this;
}

CohClass CohClass::operator+(const CohClass &other) const {
    CohClass out = *this;
    out += other;
    return out;
}

CohClass CohClass::operator*(const Integer &scalar) const {
    CohClass out(space_, degree_);
    if (scalar == 0)
        return out;
    for (const auto &[e, c] : coeffs_)
        out.coeffs_.emplace(e, c * scalar);
    return out;
}

bool CohClass::operator==(const CohClass &other) const {
    // zero is zero in every degree
    return space_.same_product(other.space_) && coeffs_ == other.coeffs_ &&
           (degree_ == other.degree_ || coeffs_.empty());
}

std::string CohClass::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : coeffs_) {
        os << (first ? "" : " + ") << c.get_str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            os << "*h" << (i + 1);
            if (e[i] > 1)
                os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

CohClass mul(const CohClass &a, const CohClass &b) {
    if (!a.space().same_product(b.space()))
        throw InvalidArgument("mul: classes live on different spaces");
    const int p = a.degree() + b.degree();
    if (p > a.space().dim())
        throw InvalidArgument("mul: degree " + std::to_string(p) + " exceeds dimension " +
                              std::to_string(a.space().dim()));
    const auto &bounds = a.space().factors();
    CohClass out(a.space(), p);
    Exponent e(bounds.size());
    for (const auto &[ea, ca] : a.coefficients())
        for (const auto &[eb, cb] : b.coefficients()) {
            bool truncated = false;
            for (std::size_t i = 0; i < bounds.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > bounds[i]) {
                    truncated = true;
                    break;
                }
            }
            if (!truncated)
                out.add_term(e, ca * cb);
        }
    return out;
}

CohClass kaehler_power(const Space &space, int p) {
    if (p < 0 || p > space.dim())
        throw InvalidArgument("kaehler_power: p = " + std::to_string(p) + " outside [0, " +
                              std::to_string(space.dim()) + "]");
    CohClass omega(space, 1);
    for (int i = 0; i < space.num_factors(); ++i)
        omega += CohClass::generator(space, i);
    CohClass out = CohClass::unit(space);
    for (int i = 0; i < p; ++i)
        out = mul(out, omega);
    return out;
}

Integer pair(const CohClass &a, const CohClass &b) {
    if (!a.space().same_product(b.space()))
        throw InvalidArgument("pair: classes live on different spaces");
    if (a.degree() + b.degree() != a.space().dim())
        throw InvalidArgument("pair: degrees " + std::to_string(a.degree()) + " + " +
                              std::to_string(b.degree()) + " do not sum to dimension " +
                              std::to_string(a.space().dim()));
    const auto &top = a.space().factors();
    Integer sum = 0;
    Exponent complement(top.size());
    for (const auto &[e, c] : a.coefficients()) {
        for (std::size_t i = 0; i < top.size(); ++i)
            complement[i] = top[i] - e[i];
        auto it = b.coefficients().find(complement);
        if (it != b.coefficients().end())
            sum += c * it->second;
    }
    return sum;
}

Integer mass(const CohClass &c) {
    return pair(c, kaehler_power(c.space(), c.space().dim() - c.degree()));
}

CohClass base_pullback_power(const Space &space, int j) {
    const int l = space.base_factors();
    const int dim_y = space.base_dim();
    if (j < 0 || j > dim_y)
        throw InvalidArgument("base_pullback_power: j = " + std::to_string(j) +
                              " outside [0, dim Y = " + std::to_string(dim_y) + "]");
    CohClass omega_y(space, 1);
    for (int i = 0; i < l; ++i)
        omega_y += CohClass::generator(space, i);
    CohClass out = CohClass::unit(space);
    for (int i = 0; i < j; ++i)
        out = mul(out, omega_y);
    return out;
}

std::pair<int, int> alpha_range(const Space &space, int p) {
    const int k = space.dim();
    const int l = space.base_dim();
    return {std::max(0, p - k + l), std::min(p, l)};
}

Integer alpha(const CohClass &c, int j) {
    const Space &space = c.space();
    const int k = space.dim();
    const int l = space.base_dim();
    const int p = c.degree();
    auto [lo, hi] = alpha_range(space, p);
    if (j < lo || j > hi)
        throw InvalidArgument("alpha: j = " + std::to_string(j) + " outside admissible range [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return pair(c, mul(base_pullback_power(space, l - j), kaehler_power(space, k - l - p + j)));
}

std::vector<Exponent> basis(const Space &space, int p) {
    std::vector<Exponent> out;
    const auto &bounds = space.factors();
    Exponent e(bounds.size(), 0);
    auto rec = [&](auto &&self, std::size_t i, int remaining) -> void {
        if (i == bounds.size()) {
            if (remaining == 0)
                out.push_back(e);
            return;
        }
        for (int v = 0; v <= std::min(bounds[i], remaining); ++v) {
            e[i] = v;
            self(self, i + 1, remaining - v);
        }
        e[i] = 0;
    };
    rec(rec, 0, p);
    return out;
}

} // namespace dyndeg
