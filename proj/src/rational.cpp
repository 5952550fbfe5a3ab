#include "chowlab/rational.hpp"

#include <cctype>
#include <sstream>

namespace chowlab {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat parse_rat(const std::string& text) {
    const size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text))
            fail(ErrorKind::Parse, "not a rational: '" + text + "'");
        return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        fail(ErrorKind::Parse, "not a rational: '" + text + "'");
    Int d(den);
    if (d == 0) fail(ErrorKind::Parse, "zero denominator: '" + text + "'");
    return Rat(Int(num), d);
}

std::string rat_to_string(const Rat& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

std::vector<std::string> ratvec_to_strings(const RatVec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Rat& x : v) out.push_back(rat_to_string(x));
    return out;
}

RatVec parse_ratvec(const std::vector<std::string>& texts) {
    RatVec out;
    out.reserve(texts.size());
    for (const std::string& t : texts) out.push_back(parse_rat(t));
    return out;
}

} // namespace chowlab
