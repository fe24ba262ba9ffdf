#include "uqwb/report.hpp"

#include <iomanip>
#include <sstream>

namespace uqwb {

bool Report::pass() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

void Report::add(std::string name, bool ok, std::string witness) {
    items.push_back({std::move(name), ok, std::move(witness)});
}

void Report::absorb(const Report& other, const std::string& prefix) {
    for (const auto& it : other.items) items.push_back({prefix + it.name, it.pass, it.witness});
}

std::string Report::to_text() const {
    std::ostringstream out;
    if (!title.empty()) out << title << "\n";
    for (const auto& it : items) {
        out << (it.pass ? "  pass  " : "  FAIL  ") << it.name;
        if (!it.witness.empty()) out << "  [" << it.witness << "]";
        out << "\n";
    }
    out << (pass() ? "status: pass" : "status: fail");
    if (seconds > 0) out << "  (" << std::fixed << std::setprecision(2) << seconds << " s)";
    out << "\n";
    return out.str();
}

}  // namespace uqwb
