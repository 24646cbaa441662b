#include "eco/diagnostics.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace eco {

std::string format_diagnostic(const Diagnostic& d) {
    std::ostringstream os;
    os << d.file << ':' << d.line << ':' << d.col << ": error[" << d.code
       << "]: " << d.message;
    return os.str();
}

void sort_diagnostics(std::vector<Diagnostic>& diags,
                      const std::vector<std::string>& file_order) {
    std::unordered_map<std::string, std::size_t> rank;
    for (std::size_t i = 0; i < file_order.size(); ++i)
        rank.emplace(file_order[i], i);
    auto file_key = [&](const Diagnostic& d) {
        auto it = rank.find(d.file);
        return it != rank.end()
                   ? std::pair<std::size_t, std::string>(it->second, "")
                   : std::pair<std::size_t, std::string>(rank.size(), d.file);
    };
    std::stable_sort(diags.begin(), diags.end(),
                     [&](const Diagnostic& a, const Diagnostic& b) {
                         auto ka = file_key(a);
                         auto kb = file_key(b);
                         if (ka != kb) return ka < kb;
                         if (a.line != b.line) return a.line < b.line;
                         if (a.col != b.col) return a.col < b.col;
                         return a.code < b.code;
                     });
}

}  // namespace eco
