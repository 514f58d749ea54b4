#include <map>

#include "legcard/error.hpp"
#include "legcard/front.hpp"

namespace legcard {

namespace detail {
const std::map<std::string, std::string>& embedded_fronts();
}

namespace {

std::string canonical_name(const std::string& name) {
    static const std::map<std::string, std::string> aliases{
        {"trefoil", "m31"}, {"m3_1", "m31"}, {"m8_21", "m821"}, {"m9_45", "m945"}, {"U", "unknot"}};
    auto it = aliases.find(name);
    return it == aliases.end() ? name : it->second;
}

}  // namespace

const std::vector<std::string>& builtin_front_names() {
    static const std::vector<std::string> names{"unknot", "unlink", "hopf", "m31", "m821", "m945"};
    return names;
}

const std::string& builtin_front_text(const std::string& name) {
    const auto& fronts = detail::embedded_fronts();
    auto it = fronts.find(canonical_name(name));
    if (it == fronts.end()) fail(ErrorKind::unknown_example, "unknown example \"" + name + "\"");
    return it->second;
}

PlatFront builtin_front(const std::string& name) { return parse_front(builtin_front_text(name)); }

}  // namespace legcard
