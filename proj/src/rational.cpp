#include "lfrs/rational.hpp"

#include <stdexcept>

namespace lfrs {

std::string rat_str(const Rat& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

Rat rat_parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int p(text.substr(0, slash));
        Int q(text.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + text + "'");
    }
}

}  // namespace lfrs
