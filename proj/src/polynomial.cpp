#include "dyndeg/polynomial.hpp"

#include "dyndeg/error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace dyndeg {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, unsigned e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1u)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

// Bit layout for packing exponent vectors of a product into one 64-bit key.
struct Packing {
    std::vector<int> shift;
    std::vector<int> width;
    bool fits = false;
};

Packing packing_for(const std::vector<int> &max_exp) {
    Packing pk;
    int total = 0;
    for (int e : max_exp) {
        const int w = e == 0 ? 0 : std::bit_width(static_cast<unsigned>(e));
        pk.shift.push_back(total);
        pk.width.push_back(w);
        total += w;
    }
    pk.fits = total <= 64;
    return pk;
}

std::uint64_t pack(const Monomial &e, const Packing &pk) {
    std::uint64_t key = 0;
    for (std::size_t v = 0; v < e.size(); ++v)
        if (pk.width[v])
            key |= static_cast<std::uint64_t>(e[v]) << pk.shift[v];
    return key;
}

Monomial unpack(std::uint64_t key, const Packing &pk) {
    Monomial e(pk.shift.size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v)
        if (pk.width[v])
            e[v] = static_cast<int>((key >> pk.shift[v]) & ((std::uint64_t{1} << pk.width[v]) - 1));
    return e;
}

} // namespace

Polynomial Polynomial::constant(int nvars, const Integer &c) {
    Polynomial p(nvars);
    p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int v) {
    if (v < 0 || v >= nvars)
        throw InvalidArgument("Polynomial: variable index out of range");
    Monomial e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(v)] = 1;
    return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Monomial e, const Integer &c) {
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const auto &e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void Polynomial::add_term(const Monomial &e, const Integer &c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw InvalidArgument("Polynomial: exponent length mismatch");
    for (int x : e)
        if (x < 0)
            throw InvalidArgument("Polynomial: negative exponent");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

const Monomial &Polynomial::leading_monomial() const {
    if (terms_.empty())
        throw InvalidArgument("Polynomial: zero polynomial has no leading term");
    return terms_.begin()->first;
}

const Integer &Polynomial::leading_coeff() const {
    if (terms_.empty())
        throw InvalidArgument("Polynomial: zero polynomial has no leading term");
    return terms_.begin()->second;
}

int Polynomial::degree(int v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto &[e, c] : terms_)
        d = std::max(d, e[static_cast<std::size_t>(v)]);
    return d;
}

int Polynomial::total_degree() const { return block_degree(0, nvars_); }

int Polynomial::block_degree(int lo, int hi) const {
    int d = -1;
    for (const auto &[e, c] : terms_) {
        int s = 0;
        for (int v = lo; v < hi; ++v)
            s += e[static_cast<std::size_t>(v)];
        d = std::max(d, s);
    }
    return d;
}

bool Polynomial::homogeneous_in(int lo, int hi) const {
    int d = -1;
    for (const auto &[e, c] : terms_) {
        int s = 0;
        for (int v = lo; v < hi; ++v)
            s += e[static_cast<std::size_t>(v)];
        if (d >= 0 && s != d)
            return false;
        d = s;
    }
    return true;
}

Monomial Polynomial::min_exponents() const {
    Monomial m(static_cast<std::size_t>(nvars_), 0);
    if (terms_.empty())
        return m;
    m = terms_.begin()->first;
    for (const auto &[e, c] : terms_)
        for (std::size_t v = 0; v < m.size(); ++v)
            m[v] = std::min(m[v], e[v]);
    return m;
}

Integer Polynomial::content() const {
    Integer g = 0;
    for (const auto &[e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

void Polynomial::check_vars(const Polynomial &o) const {
    if (nvars_ != o.nvars_)
        throw InvalidArgument("Polynomial: variable count mismatch");
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
    check_vars(o);
    for (const auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
    check_vars(o);
    for (const auto &[e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial &o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial &o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto &[e, c] : r.terms_)
        c = -c;
    return r;
}

Polynomial Polynomial::operator*(const Integer &c) const {
    Polynomial r(nvars_);
    if (c == 0)
        return r;
    for (const auto &[e, v] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), e, v * c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial &o) const {
    check_vars(o);
    Polynomial r(nvars_);
    if (terms_.empty() || o.terms_.empty())
        return r;
    if (terms_.size() == 1 || o.terms_.size() == 1) {
        const Polynomial &single = terms_.size() == 1 ? *this : o;
        const Polynomial &other = terms_.size() == 1 ? o : *this;
        const auto &[se, sc] = *single.terms_.begin();
        Monomial e(se.size());
        // multiplying by a monomial preserves the term order
        for (const auto &[oe, oc] : other.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v)
                e[v] = se[v] + oe[v];
            r.terms_.emplace_hint(r.terms_.end(), e, sc * oc);
        }
        return r;
    }

    std::vector<int> max_exp(static_cast<std::size_t>(nvars_), 0);
    for (int v = 0; v < nvars_; ++v)
        max_exp[static_cast<std::size_t>(v)] = degree(v) + o.degree(v);
    const Packing pk = packing_for(max_exp);
    if (pk.fits) {
        std::vector<std::pair<std::uint64_t, const Integer *>> ta, tb;
        ta.reserve(terms_.size());
        tb.reserve(o.terms_.size());
        for (const auto &[e, c] : terms_)
            ta.emplace_back(pack(e, pk), &c);
        for (const auto &[e, c] : o.terms_)
            tb.emplace_back(pack(e, pk), &c);
        // packed fields never carry into each other, so key(a) + key(b) = key(a * b)
        std::unordered_map<std::uint64_t, Integer> acc;
        acc.reserve(std::min<std::size_t>(ta.size() * tb.size(), 1u << 22));
        for (const auto &[ka, ca] : ta)
            for (const auto &[kb, cb] : tb) {
                Integer &slot = acc[ka + kb];
                mpz_addmul(slot.get_mpz_t(), ca->get_mpz_t(), cb->get_mpz_t());
            }
        for (auto &[key, c] : acc)
            if (c != 0)
                r.terms_.emplace(unpack(key, pk), std::move(c));
        return r;
    }

    Monomial e(static_cast<std::size_t>(nvars_));
    for (const auto &[ea, ca] : terms_)
        for (const auto &[eb, cb] : o.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v)
                e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(int v) const {
    Polynomial r(nvars_);
    const auto idx = static_cast<std::size_t>(v);
    for (const auto &[e, c] : terms_) {
        if (e[idx] == 0)
            continue;
        Monomial d = e;
        --d[idx];
        r.add_term(d, c * e[idx]);
    }
    return r;
}

std::uint64_t Polynomial::eval_mod(const std::vector<std::uint64_t> &point,
                                   std::uint64_t prime) const {
    std::uint64_t acc = 0;
    for (const auto &[e, c] : terms_) {
        std::uint64_t t = mpz_fdiv_ui(c.get_mpz_t(), prime);
        for (std::size_t v = 0; v < e.size() && t; ++v)
            if (e[v])
                t = mulmod(t, powmod(point[v], static_cast<unsigned>(e[v]), prime), prime);
        acc = (acc + t) % prime;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial> &images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw InvalidArgument("Polynomial::substitute: need one image per variable");
    const int out_vars = images.empty() ? 0 : images.front().nvars();
    for (const auto &img : images)
        if (img.nvars() != out_vars)
            throw InvalidArgument("Polynomial::substitute: images disagree on variable count");

    // powers[v][j] = images[v]^j, built incrementally up to the needed degree
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (int v = 0; v < nvars_; ++v) {
        const int d = degree(v);
        auto &pw = powers[static_cast<std::size_t>(v)];
        pw.push_back(constant(out_vars, 1));
        for (int j = 1; j <= d; ++j)
            pw.push_back(pw.back() * images[static_cast<std::size_t>(v)]);
    }
    Polynomial out(out_vars);
    for (const auto &[e, c] : terms_) {
        Polynomial t = constant(out_vars, c);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v])
                t = t * powers[v][static_cast<std::size_t>(e[v])];
        out += t;
    }
    return out;
}

Polynomial Polynomial::divide_integer(const Integer &c) const {
    if (c == 0)
        throw InvalidArgument("Polynomial: division by zero");
    Polynomial r(nvars_);
    for (const auto &[e, v] : terms_) {
        if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()))
            throw ComputationError("Polynomial: inexact integer division");
        Integer q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
        r.terms_.emplace_hint(r.terms_.end(), e, std::move(q));
    }
    return r;
}

Polynomial Polynomial::divide_monomial(const Monomial &m) const {
    Polynomial r(nvars_);
    for (const auto &[e, v] : terms_) {
        Monomial d = e;
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] -= m[i];
            if (d[i] < 0)
                throw ComputationError("Polynomial: inexact monomial division");
        }
        r.terms_.emplace_hint(r.terms_.end(), std::move(d), v);
    }
    return r;
}

std::map<int, Polynomial> Polynomial::coefficients_in(int v) const {
    std::map<int, Polynomial> out;
    const auto idx = static_cast<std::size_t>(v);
    for (const auto &[e, c] : terms_) {
        Monomial rest = e;
        rest[idx] = 0;
        auto it = out.try_emplace(e[idx], nvars_).first;
        it->second.add_term(rest, c);
    }
    return out;
}

std::string Polynomial::to_string(const std::vector<std::string> &names) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        const bool unit_monomial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        Integer mag = ::abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        bool need_star = false;
        if (mag != 1 || unit_monomial) {
            os << mag.get_str();
            need_star = true;
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0)
                continue;
            if (need_star)
                os << "*";
            os << (v < names.size() ? names[v] : "v" + std::to_string(v));
            if (e[v] > 1)
                os << "^" << e[v];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

bool try_divide(const Polynomial &a, const Polynomial &b, Polynomial &quotient) {
    if (b.is_zero())
        throw InvalidArgument("Polynomial: division by zero");
    if (a.nvars() != b.nvars())
        throw InvalidArgument("Polynomial: variable count mismatch");
    Polynomial q(a.nvars());
    Polynomial r = a;
    const Monomial &lb = b.leading_monomial();
    const Integer &cb = b.leading_coeff();
    while (!r.is_zero()) {
        const Monomial &lr = r.leading_monomial();
        Monomial d(lr.size());
        for (std::size_t v = 0; v < d.size(); ++v) {
            d[v] = lr[v] - lb[v];
            if (d[v] < 0)
                return false;
        }
        if (!mpz_divisible_p(r.leading_coeff().get_mpz_t(), cb.get_mpz_t()))
            return false;
        Integer c;
        mpz_divexact(c.get_mpz_t(), r.leading_coeff().get_mpz_t(), cb.get_mpz_t());
        Polynomial t = Polynomial::monomial(std::move(d), c);
        r -= t * b;
        q += t;
    }
    quotient = std::move(q);
    return true;
}

Polynomial divide_exact(const Polynomial &a, const Polynomial &b) {
    Polynomial q;
    if (!try_divide(a, b, q))
        throw ComputationError("Polynomial: inexact division");
    return q;
}

namespace {

class Parser {
  public:
    Parser(const std::string &text, const std::vector<std::string> &names)
        : s_(text), names_(names), nvars_(static_cast<int>(names.size())) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw InvalidArgument("polynomial parse error at position " + std::to_string(pos_) +
                              " in \"" + s_ + "\": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc(nvars_);
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Polynomial t = term();
        acc += negate ? -t : t;
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial t = factor();
        while (accept('*'))
            t = t * factor();
        return t;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return b;
    }

    Polynomial base() {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        if (accept('(')) {
            Polynomial e = expr();
            if (!accept(')'))
                fail("expected ')'");
            return e;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return Polynomial::constant(nvars_, Integer(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end())
                fail("unknown variable '" + name + "'");
            return Polynomial::variable(nvars_, static_cast<int>(it - names_.begin()));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string &s_;
    const std::vector<std::string> &names_;
    int nvars_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string &text, const std::vector<std::string> &names) {
    return Parser(text, names).parse();
}

} // namespace dyndeg
