#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eco/emitter.hpp"
#include "eco/interpreter.hpp"
#include "eco/lowering.hpp"
#include "eco/pipeline.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string stdlib_path(const std::string& name) {
    return std::string(ECO_STDLIB_DIR) + "/" + name;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(ECO_FIXTURE_DIR) + "/" + name;
}

inline std::vector<eco::SourceFile> load_sources(
    const std::vector<std::string>& paths) {
    std::vector<eco::SourceFile> files;
    for (const std::string& p : paths) files.push_back({p, read_file(p)});
    return files;
}

inline std::vector<eco::SourceFile> load_stdlib(
    const std::vector<std::string>& names) {
    std::vector<std::string> paths;
    for (const std::string& n : names) paths.push_back(stdlib_path(n));
    return load_sources(paths);
}

inline const std::vector<std::string>& all_stdlib_names() {
    static const std::vector<std::string> names = {
        "graph.eco",     "labeling.eco", "orientation.eco",
        "embedding.eco", "orth_shape.eco", "conncomp.eco",
        "planar.eco"};
    return names;
}

// Pipeline front half + a live interpreter over the result. Keeps the core
// program alive for as long as the interpreter needs its AST.
class Session {
public:
    explicit Session(const std::vector<eco::SourceFile>& files,
                     eco::InterpreterOptions options = {}) {
        eco::CheckResult checked = eco::check_sources(files);
        if (!checked.ok) {
            std::string what = "check failed:";
            for (const auto& d : checked.diags)
                what += "\n  " + eco::format_diagnostic(d);
            throw std::runtime_error(what);
        }
        core_ = std::make_unique<eco::CoreProgram>(
            eco::lower(checked.module, checked.table));
        interp_ = std::make_unique<eco::Interpreter>(*core_, options);
    }

    eco::Interpreter& interp() { return *interp_; }
    const eco::CoreProgram& core() const { return *core_; }

private:
    std::unique_ptr<eco::CoreProgram> core_;
    std::unique_ptr<eco::Interpreter> interp_;
};

// Shorthands for poking interpreted objects from tests.
inline eco::Value field(eco::Interpreter&, const eco::Value& obj,
                        const std::string& name) {
    eco::Value* slot = obj.as_object()->find_field(name);
    if (!slot) throw std::runtime_error("no field " + name);
    return *slot;
}

inline long long int_field(eco::Interpreter& in, const eco::Value& obj,
                           const std::string& name) {
    return field(in, obj, name).as_int();
}

}  // namespace testutil
