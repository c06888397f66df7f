#include "wmg/geometry.hpp"

#include <charconv>

namespace wmg {

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string Point::str() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
        if (i) s += ", ";
        s += format_double(coords_[static_cast<std::size_t>(i)]);
    }
    s += ")";
    return s;
}

} // namespace wmg
