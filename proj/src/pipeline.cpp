#include "eco/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "eco/emitter.hpp"
#include "eco/parser.hpp"

namespace eco {

CheckResult check_sources(const std::vector<SourceFile>& files) {
    CheckResult result;
    std::vector<std::string> file_order;
    file_order.reserve(files.size());

    for (const SourceFile& f : files) {
        file_order.push_back(f.path);
        ParseResult parsed = parse_source(f.text, f.path);
        for (auto& d : parsed.diags) result.diags.push_back(std::move(d));
        for (auto& c : parsed.module.classes)
            result.module.classes.push_back(std::move(c));
    }
    if (!result.diags.empty()) {
        sort_diagnostics(result.diags, file_order);
        return result;
    }

    AnalysisResult analyzed = analyze(result.module, file_order);
    result.diags = std::move(analyzed.diags);
    if (!result.diags.empty()) return result;

    result.table = std::move(analyzed.table);
    result.ok = true;
    return result;
}

std::optional<SourceFile> read_source_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return SourceFile{path, buf.str()};
}

std::optional<std::string> emit_sources(const std::vector<SourceFile>& files,
                                        std::vector<Diagnostic>* diags_out) {
    CheckResult checked = check_sources(files);
    if (diags_out) *diags_out = checked.diags;
    if (!checked.ok) return std::nullopt;
    return emit(lower(checked.module, checked.table));
}

}  // namespace eco
