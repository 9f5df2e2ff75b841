#include "ratdiag/model.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ratdiag {

// ---------------------------------------------------------------- Poly2

Poly2 Poly2::constant(const Rational& c) { return monomial(0, 0, c); }

Poly2 Poly2::monomial(int dz, int dw, const Rational& c) {
    Poly2 p;
    p.add_term(dz, dw, c);
    return p;
}

void Poly2::add_term(int dz, int dw, const Rational& c) {
    if (dz < 0 || dw < 0)
        raise(Errc::internal, "negative exponent in polynomial term");
    if (sgn(c) == 0) return;
    auto key = Key{dz, dw};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Rational Poly2::coeff(int dz, int dw) const {
    auto it = terms_.find(Key{dz, dw});
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::total_degree() const {
    int deg = -1;
    for (const auto& [k, c] : terms_) deg = std::max(deg, k.first + k.second);
    return deg;
}

Rational Poly2::eval(const Rational& z, const Rational& w) const {
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
        Rational t = c;
        t *= pow_rational(z, static_cast<unsigned long>(k.first));
        t *= pow_rational(w, static_cast<unsigned long>(k.second));
        acc += t;
    }
    return acc;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
    return out;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, -c);
    return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

Poly2 Poly2::scaled(const Rational& c) const {
    Poly2 out;
    for (const auto& [k, v] : terms_) out.add_term(k.first, k.second, c * v);
    return out;
}

std::string Poly2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && (k.first != 0 || k.second != 0);
        if (!unit) os << ratdiag::to_string(a);
        if (k.first > 0 || k.second > 0) {
            if (!unit) os << "*";
            if (k.first > 0) {
                os << "z";
                if (k.first > 1) os << "^" << k.first;
            }
            if (k.second > 0) {
                if (k.first > 0) os << "*";
                os << "w";
                if (k.second > 1) os << "^" << k.second;
            }
        }
    }
    return os.str();
}

// --------------------------------------------------------- LinearFactor

Rational LinearFactor::eval(const Rational& z, const Rational& w) const {
    return Rational(1) - a * z - b * w;
}

Poly2 LinearFactor::poly() const {
    Poly2 p = Poly2::constant(1);
    p.add_term(1, 0, -a);
    p.add_term(0, 1, -b);
    return p;
}

// -------------------------------------------------------------- GFModel

const LinearFactor& GFModel::factor(int i) const {
    if (i < 1 || i > factor_count())
        raise(Errc::internal, "factor index out of range");
    return factors[static_cast<size_t>(i - 1)];
}

// -------------------------------------------------------------- parsing

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const char* where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known)
            raise(Errc::syntax_error,
                  std::string("unknown key '") + it.key() + "' in " + where);
    }
}

Rational rational_field(const json& obj, const char* key, const char* where) {
    if (!obj.contains(key))
        raise(Errc::syntax_error,
              std::string("missing key '") + key + "' in " + where);
    const json& v = obj.at(key);
    if (!v.is_string())
        raise(Errc::syntax_error, std::string("key '") + key + "' in " + where +
                                      " must be a rational string");
    return parse_rational(v.get<std::string>());
}

int exponent_field(const json& obj, const char* key, const char* where) {
    if (!obj.contains(key))
        raise(Errc::syntax_error,
              std::string("missing key '") + key + "' in " + where);
    const json& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        raise(Errc::syntax_error, std::string("key '") + key + "' in " + where +
                                      " must be a nonnegative integer");
    return static_cast<int>(v.get<long long>());
}

} // namespace

GFModel parse_model(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(Errc::syntax_error, std::string("model file is not valid JSON: ") + e.what());
    }
    if (!root.is_object())
        raise(Errc::syntax_error, "model file must be a JSON object");
    reject_unknown_keys(root, {"numerator", "factors"}, "model file");

    GFModel m;

    if (root.contains("numerator")) {
        const json& num = root.at("numerator");
        if (!num.is_array())
            raise(Errc::syntax_error, "'numerator' must be an array of terms");
        for (const json& term : num) {
            if (!term.is_object())
                raise(Errc::syntax_error, "numerator terms must be objects");
            reject_unknown_keys(term, {"z", "w", "coeff"}, "numerator term");
            int dz = exponent_field(term, "z", "numerator term");
            int dw = exponent_field(term, "w", "numerator term");
            m.numerator.add_term(dz, dw, rational_field(term, "coeff", "numerator term"));
        }
    } else {
        m.numerator = Poly2::constant(1);
    }
    if (m.numerator.is_zero())
        raise(Errc::syntax_error, "numerator polynomial is identically zero");

    if (!root.contains("factors"))
        raise(Errc::syntax_error, "missing key 'factors'");
    const json& factors = root.at("factors");
    if (!factors.is_array())
        raise(Errc::syntax_error, "'factors' must be an array");
    if (factors.empty())
        raise(Errc::empty_factors, "model has no denominator factors");
    for (const json& f : factors) {
        if (!f.is_object())
            raise(Errc::syntax_error, "factors must be objects");
        reject_unknown_keys(f, {"a", "b"}, "factor");
        LinearFactor lf{rational_field(f, "a", "factor"),
                        rational_field(f, "b", "factor")};
        if (sgn(lf.a) == 0 && sgn(lf.b) == 0)
            raise(Errc::syntax_error, "factor with a = b = 0 is constant");
        m.factors.push_back(std::move(lf));
    }
    return m;
}

GFModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(Errc::io_error, "cannot open model file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

// ------------------------------------------------------- determinants

Rational delta(const GFModel& m, int i, int j) {
    const LinearFactor& fi = m.factor(i);
    const LinearFactor& fj = m.factor(j);
    return fi.a * fj.b - fj.a * fi.b;
}

Rational delta3(const GFModel& m, int i, int j, int l) {
    // det [[1,1,1],[a_i,a_j,a_l],[b_i,b_j,b_l]], expanded along the top row
    return delta(m, j, l) - delta(m, i, l) + delta(m, i, j);
}

} // namespace ratdiag
