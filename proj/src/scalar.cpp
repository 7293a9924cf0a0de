#include "p3lie/scalar.hpp"

#include <cctype>
#include <ostream>

namespace p3lie {

Scalar::Scalar(long num, long den) {
    if (den == 0) throw InputError("scalar with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.isZero()) throw InputError("division by zero scalar");
    v_ /= o.v_;
    return *this;
}

Scalar Scalar::parse(const std::string& text) {
    // strict shape check first; mpq_set_str is lenient about some forms we reject
    std::size_t i = 0;
    auto digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return pos > start;
    };
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (!digits(i)) throw InputError("bad scalar literal: '" + text + "'");
    if (i < text.size()) {
        if (text[i] != '/') throw InputError("bad scalar literal: '" + text + "'");
        ++i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        if (!digits(i) || i != text.size())
            throw InputError("bad scalar literal: '" + text + "'");
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw InputError("bad scalar literal: '" + text + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw InputError("scalar with zero denominator: '" + text + "'");
    q.canonicalize();
    return Scalar(q);
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace p3lie
