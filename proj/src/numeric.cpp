#include "mckay/numeric.hpp"

#include <algorithm>
#include <cctype>

#include "mckay/error.hpp"

namespace mckay {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadShape: return "BadShape";
        case ErrorCode::NonGenerating: return "NonGenerating";
        case ErrorCode::NotInM: return "NotInM";
        case ErrorCode::BadTheta: return "BadTheta";
        case ErrorCode::MismatchedDescriptions: return "MismatchedDescriptions";
        case ErrorCode::OutsideSupport: return "OutsideSupport";
        case ErrorCode::NotOptimal: return "NotOptimal";
        case ErrorCode::NegativeW: return "NegativeW";
        case ErrorCode::UnboundedObjective: return "UnboundedObjective";
        case ErrorCode::TrivialGroup: return "TrivialGroup";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

Rational dot(const RatVector& a, const IntVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

bool is_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

IntVector make_primitive(IntVector v) {
    Integer g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return v;
    }
    if (g > 1) {
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return v;
}

Integer common_denominator(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

IntVector clear_denominators(const RatVector& v) {
    const Integer l = common_denominator(v);
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.get_num() * (l / x.get_den()));
    return make_primitive(std::move(out));
}

RatVector to_rational(const IntVector& v) {
    return RatVector(v.begin(), v.end());
}

IntVector to_integer(const std::vector<std::int64_t>& v) {
    IntVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

RatVector to_rational(const std::vector<std::int64_t>& v) {
    RatVector out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() &&
               std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto to_mpz = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return Integer(std::string(s));
    };
    text = trim(text);
    const auto slash = text.find('/');
    const auto num = trim(text.substr(0, slash));
    const auto den = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
    if (!is_int(num) || !is_int(den)) {
        throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
    }
    Integer d = to_mpz(den);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational q(to_mpz(num), d);
    q.canonicalize();
    return q;
}

bool lex_less(const RatVector& a, const RatVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Echelon row_echelon(RatMatrix rows, std::size_t cols) {
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

std::size_t rank(const RatMatrix& rows, std::size_t cols) {
    return row_echelon(rows, cols).pivots.size();
}

RatMatrix nullspace(const RatMatrix& a, std::size_t cols) {
    const auto ech = row_echelon(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    RatMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVector reduce_modulo(const Echelon& basis, RatVector x) {
    for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
        const Rational f = x[basis.pivots[i]];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (sgn(basis.rows[i][j]) != 0) x[j] -= f * basis.rows[i][j];
        }
    }
    return x;
}

}  // namespace mckay
