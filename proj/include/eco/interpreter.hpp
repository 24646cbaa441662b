#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "eco/emitter.hpp"
#include "eco/value.hpp"

namespace eco {

// A value raised by ECO-mini `throw`; catchable by try/catch. Travels as a
// C++ exception through the evaluator.
struct UserThrow {
    Value value;
};

struct ClassRt {
    std::string name;
    const ClassDecl* decl = nullptr;
    const ClassRt* base = nullptr;
    // flattened over the base chain at load time: field slots (base first,
    // shadowed names merged) and methods (derived overrides base)
    std::unordered_map<std::string, std::size_t> field_index;
    std::size_t field_count = 0;
    std::unordered_map<std::string, const MethodDecl*> methods;
    const CtorDecl* ctor = nullptr;
};

struct InterpreterOptions {
    long long max_steps = 10000000;  // evaluation step budget (R104 beyond)
};

// Executes a core program. One instance is single-threaded and owns every
// object it allocates; objects persist until the interpreter is destroyed.
// RuntimeError (R1xx) and UserThrow escape from the call API; run_program
// below folds them into exit codes.
class Interpreter {
public:
    explicit Interpreter(const CoreProgram& core, InterpreterOptions options = {});

    Interpreter(const Interpreter&) = delete;
    Interpreter& operator=(const Interpreter&) = delete;

    Value make_instance(const std::string& class_name, std::vector<Value> args);
    Value call_method(const Value& receiver, const std::string& method,
                      std::vector<Value> args);
    Value call_static(const std::string& class_name, const std::string& method,
                      std::vector<Value> args);

    const ClassRt* find_class(const std::string& name) const;
    const std::string& stdout_text() const { return stdout_; }
    runtime::RegistryStats& stats() { return stats_; }
    long long steps_used() const { return steps_; }

    // intrinsic entry points, also used by the test harness
    void eco_attach(const Value& support, const Value& ext,
                    const std::string& type_name, bool is_classer);
    void eco_detach(const Value& ext);
    Value eco_dispatch(const Value& support, const std::string& name,
                       const std::vector<Value>& args);
    bool eco_has(const Value& support, const std::string& type_name);
    Value eco_get(const Value& support, const std::string& type_name);
    void eco_destroy(const Value& obj);

private:
    // scopes hold few names; linear scan beats a map here
    struct Scope {
        std::vector<std::pair<std::string, Value>> vars;
    };
    struct Frame {
        ObjectInstance* self = nullptr;
        std::vector<Scope> scopes;
    };
    struct BarrierFrame {
        ObjectInstance* bound = nullptr;
        std::unordered_set<ObjectInstance*> allocated;
    };
    struct ReturnSignal {
        Value value;
    };

    void load(const CoreProgram& core);
    bool behavior_defined(const ClassRt* cls, const std::string& name) const;
    const MethodDecl* resolve_method(const ClassRt* cls,
                                     const std::string& name) const;

    void step();
    Value eval(const Expr& e, Frame& frame);
    Value eval_binary(const Expr& e, Frame& frame);
    Value eval_method_call(const Expr& e, Frame& frame);
    Value eval_intrinsic(const Expr& e, Frame& frame);
    Value eval_free_call(const Expr& e, Frame& frame);
    Value call_builtin_list(const ListRef& list, const std::string& method,
                            const std::vector<Value>& args, int line, int col);
    void exec_block(const Block& b, Frame& frame);
    void exec_stmt(const Stmt& s, Frame& frame);

    Value invoke(ObjectInstance* self, const MethodDecl& method,
                 std::vector<Value> args);
    Value run_ctor(ObjectInstance* obj, std::vector<Value> args, int line,
                   int col);

    ObjectInstance* expect_live_object(const Value& v, const char* what) const;
    void check_field_write(ObjectInstance* target);
    void note_allocation(ObjectInstance* obj);

    Value* lookup_var(Frame& frame, const std::string& name);
    void declare_var(Frame& frame, const std::string& name, Value v, int line,
                     int col);

    std::map<std::string, ClassRt> classes_;
    std::set<std::pair<std::string, std::string>> meta_;
    std::vector<std::unique_ptr<ObjectInstance>> objects_;
    std::vector<BarrierFrame> barrier_;
    runtime::RegistryStats stats_;
    InterpreterOptions options_;
    long long steps_ = 0;
    long long call_depth_ = 0;
    long long next_serial_ = 0;
    std::string stdout_;
};

struct RunOutcome {
    int exit_code = 0;          // 0 normal, 1 uncaught throw, 2 runtime error
    std::string stdout_text;
    std::string error_text;     // empty on exit 0
};

// Parses core text (with its //#eco-meta block) and executes static method
// `entry` of class Main.
RunOutcome run_program(const std::string& core_text,
                       const std::string& entry = "main",
                       InterpreterOptions options = {});

}  // namespace eco
