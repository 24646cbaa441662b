#include "eco/interpreter.hpp"

#include <limits>

#include "eco/planarity.hpp"

namespace eco {

bool value_equal(const Value& a, const Value& b) {
    return a.data_ == b.data_;  // monostate/int/bool/string by value,
                                // ListRef/ObjectInstance* by identity
}

Value* ObjectInstance::find_field(const std::string& name) {
    auto it = cls->field_index.find(name);
    return it != cls->field_index.end() ? &field_slots[it->second] : nullptr;
}

namespace {

// lists are identity-shared, so they can contain themselves; rendering
// bottoms out rather than recursing forever
std::string display_depth(const Value& v, int depth) {
    if (v.is_null()) return "null";
    if (v.is_int()) return std::to_string(v.as_int());
    if (v.is_bool()) return v.as_bool() ? "true" : "false";
    if (v.is_str()) return v.as_str();
    if (v.is_list()) {
        if (depth >= 32) return "[...]";
        std::string out = "[";
        const auto& items = v.as_list()->items;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) out += ", ";
            out += display_depth(items[i], depth + 1);
        }
        return out + "]";
    }
    ObjectInstance* obj = v.as_object();
    return "<" + obj->cls->name + "#" + std::to_string(obj->serial) + ">";
}

}  // namespace

std::string value_to_display(const Value& v) {
    return display_depth(v, 0);
}

namespace {

std::string pos_text(int line, int col) {
    return " (line " + std::to_string(line) + ", col " + std::to_string(col) +
           ")";
}

bool starts_with(const std::string& s, const char* prefix) {
    return s.rfind(prefix, 0) == 0;
}

}  // namespace

Interpreter::Interpreter(const CoreProgram& core, InterpreterOptions options)
    : options_(options) {
    load(core);
}

void Interpreter::load(const CoreProgram& core) {
    for (const ClassDecl& c : core.module.classes) {
        if (classes_.count(c.name))
            runtime_error("R104", "duplicate class '" + c.name + "' in core text");
        std::set<std::string> own_methods;
        for (const MethodDecl& m : c.methods)
            if (!own_methods.insert(m.name).second)
                runtime_error("R104", "duplicate method '" + m.name +
                                          "' in class '" + c.name + "'");
        ClassRt rt;
        rt.name = c.name;
        rt.decl = &c;
        if (!c.ctors.empty()) rt.ctor = &c.ctors.front();
        classes_.emplace(c.name, std::move(rt));
    }
    for (auto& [name, rt] : classes_) {
        const std::string& base = rt.decl->base_class;
        if (base.empty()) continue;
        auto it = classes_.find(base);
        if (it == classes_.end())
            runtime_error("R104", "unknown base class '" + base +
                                      "' of class '" + name + "'");
        rt.base = &it->second;
    }
    // flatten fields and methods over the base chain: base slots first,
    // shadowed field names merge, derived methods override
    for (auto& [name, rt] : classes_) {
        std::vector<const ClassRt*> chain;
        std::set<const ClassRt*> seen;
        for (const ClassRt* c = &rt; c; c = c->base) {
            if (!seen.insert(c).second)
                runtime_error("R104",
                              "inheritance cycle involving class '" + name + "'");
            chain.push_back(c);
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            for (const FieldDecl& f : (*it)->decl->fields)
                if (rt.field_index.emplace(f.name, rt.field_count).second)
                    ++rt.field_count;
            // more derived classes overwrite base entries
            for (const MethodDecl& m : (*it)->decl->methods)
                rt.methods[m.name] = &m;
        }
    }
    for (const auto& pair : core.meta) meta_.insert(pair);
}

bool Interpreter::behavior_defined(const ClassRt* cls,
                                   const std::string& name) const {
    for (const ClassRt* c = cls; c; c = c->base)
        if (meta_.count({c->name, name})) return true;
    return false;
}

const MethodDecl* Interpreter::resolve_method(const ClassRt* cls,
                                              const std::string& name) const {
    auto it = cls->methods.find(name);
    return it != cls->methods.end() ? it->second : nullptr;
}

const ClassRt* Interpreter::find_class(const std::string& name) const {
    auto it = classes_.find(name);
    return it != classes_.end() ? &it->second : nullptr;
}

void Interpreter::step() {
    if (++steps_ > options_.max_steps)
        runtime_error("R104", "step budget of " +
                                  std::to_string(options_.max_steps) +
                                  " evaluation steps exceeded");
}

ObjectInstance* Interpreter::expect_live_object(const Value& v,
                                                const char* what) const {
    if (!v.is_object())
        runtime_error("R104", std::string(what) + ": not an object");
    ObjectInstance* obj = v.as_object();
    if (!obj->live)
        runtime_error("R104",
                      std::string(what) + ": use of a destroyed object");
    return obj;
}

void Interpreter::check_field_write(ObjectInstance* target) {
    if (barrier_.empty()) return;
    const BarrierFrame& frame = barrier_.back();
    if (target == frame.bound || frame.allocated.count(target)) return;
    runtime_error("R102",
                  "a dispatched behavior may only assign fields of its own "
                  "extension object or of objects it allocated");
}

void Interpreter::note_allocation(ObjectInstance* obj) {
    if (!barrier_.empty()) barrier_.back().allocated.insert(obj);
}

Value* Interpreter::lookup_var(Frame& frame, const std::string& name) {
    for (auto it = frame.scopes.rbegin(); it != frame.scopes.rend(); ++it)
        for (auto& [var, value] : it->vars)
            if (var == name) return &value;
    return nullptr;
}

void Interpreter::declare_var(Frame& frame, const std::string& name, Value v,
                              int line, int col) {
    for (const auto& [var, value] : frame.scopes.back().vars)
        if (var == name)
            runtime_error("R104", "variable '" + name +
                                      "' already declared in this scope" +
                                      pos_text(line, col));
    frame.scopes.back().vars.emplace_back(name, std::move(v));
}

Value Interpreter::make_instance(const std::string& class_name,
                                 std::vector<Value> args) {
    const ClassRt* cls = find_class(class_name);
    if (!cls) runtime_error("R104", "unknown class '" + class_name + "'");
    objects_.push_back(std::make_unique<ObjectInstance>());
    ObjectInstance* obj = objects_.back().get();
    obj->cls = cls;
    obj->serial = next_serial_++;
    obj->field_slots.resize(cls->field_count);
    note_allocation(obj);
    run_ctor(obj, std::move(args), cls->decl->line, cls->decl->col);
    return Value(obj);
}

Value Interpreter::run_ctor(ObjectInstance* obj, std::vector<Value> args,
                            int line, int col) {
    const ClassRt* cls = obj->cls;
    if (!cls->ctor) {
        if (!args.empty())
            runtime_error("R104", "class '" + cls->name +
                                      "' has no constructor taking " +
                                      std::to_string(args.size()) +
                                      " argument(s)" + pos_text(line, col));
        return Value(obj);
    }
    const CtorDecl& ctor = *cls->ctor;
    if (ctor.params.size() != args.size())
        runtime_error("R104",
                      "constructor of '" + cls->name + "' expects " +
                          std::to_string(ctor.params.size()) +
                          " argument(s), got " + std::to_string(args.size()) +
                          pos_text(line, col));
    if (call_depth_ >= 1000)
        runtime_error("R104", "call depth limit of 1000 exceeded");
    ++call_depth_;
    struct DepthGuard {
        long long& depth;
        ~DepthGuard() { --depth; }
    } guard{call_depth_};
    Frame frame;
    frame.self = obj;
    frame.scopes.emplace_back();
    for (std::size_t i = 0; i < args.size(); ++i)
        frame.scopes.back().vars.emplace_back(ctor.params[i].name,
                                              std::move(args[i]));
    try {
        exec_block(ctor.body, frame);
    } catch (const ReturnSignal&) {
        // constructors may return early; the value is the new object
    }
    return Value(obj);
}

Value Interpreter::invoke(ObjectInstance* self, const MethodDecl& method,
                          std::vector<Value> args) {
    if (method.params.size() != args.size())
        runtime_error("R104", "method '" + method.name + "' expects " +
                                  std::to_string(method.params.size()) +
                                  " argument(s), got " +
                                  std::to_string(args.size()));
    // unbounded ECO recursion would blow the host stack long before the
    // step budget fires
    if (call_depth_ >= 1000)
        runtime_error("R104", "call depth limit of 1000 exceeded");
    ++call_depth_;
    struct DepthGuard {
        long long& depth;
        ~DepthGuard() { --depth; }
    } guard{call_depth_};
    Frame frame;
    frame.self = self;
    frame.scopes.emplace_back();
    for (std::size_t i = 0; i < args.size(); ++i)
        frame.scopes.back().vars.emplace_back(method.params[i].name,
                                              std::move(args[i]));
    try {
        exec_block(method.body, frame);
    } catch (ReturnSignal& ret) {
        return std::move(ret.value);
    }
    return Value();
}

Value Interpreter::call_method(const Value& receiver, const std::string& method,
                               std::vector<Value> args) {
    if (receiver.is_list())
        return call_builtin_list(receiver.as_list(), method, args, 0, 0);
    ObjectInstance* obj = expect_live_object(receiver, "method call");
    const MethodDecl* m = resolve_method(obj->cls, method);
    if (!m || m->is_static)
        runtime_error("R104", "class '" + obj->cls->name +
                                  "' has no method '" + method + "'");
    return invoke(obj, *m, std::move(args));
}

Value Interpreter::call_static(const std::string& class_name,
                               const std::string& method,
                               std::vector<Value> args) {
    const ClassRt* cls = find_class(class_name);
    if (!cls) runtime_error("R104", "unknown class '" + class_name + "'");
    const MethodDecl* m = resolve_method(cls, method);
    if (!m || !m->is_static)
        runtime_error("R104", "class '" + class_name +
                                  "' has no static method '" + method + "'");
    return invoke(nullptr, *m, std::move(args));
}

// ---------------------------------------------------------------------------
// intrinsics

void Interpreter::eco_attach(const Value& support, const Value& ext,
                             const std::string& type_name, bool is_classer) {
    ObjectInstance* s = expect_live_object(support, "eco_attach");
    ObjectInstance* e = expect_live_object(ext, "eco_attach");
    runtime::attach(*s, *e, type_name, is_classer, stats_);
}

void Interpreter::eco_detach(const Value& ext) {
    ObjectInstance* e = expect_live_object(ext, "eco_detach");
    runtime::detach(*e, stats_);
}

bool Interpreter::eco_has(const Value& support, const std::string& type_name) {
    ObjectInstance* s = expect_live_object(support, "eco_has");
    return runtime::classer_present(*s, type_name);
}

Value Interpreter::eco_get(const Value& support, const std::string& type_name) {
    ObjectInstance* s = expect_live_object(support, "eco_get");
    return Value(
        static_cast<ObjectInstance*>(&runtime::classer_get(*s, type_name)));
}

void Interpreter::eco_destroy(const Value& obj) {
    ObjectInstance* o = expect_live_object(obj, "eco_destroy");
    runtime::destroy(*o, stats_);
}

Value Interpreter::eco_dispatch(const Value& support, const std::string& name,
                                const std::vector<Value>& args) {
    ObjectInstance* s = expect_live_object(support, "eco_dispatch");
    std::string behavior_name = "__eco_b_" + name;
    bool fatal_on_throw = starts_with(name, "Pre_") || starts_with(name, "Post_");

    // Snapshot the entries first: behaviors may attach or detach extensions
    // of this same support while we iterate. Entries attached after this
    // point are not notified; entries detached after it are skipped below.
    std::vector<runtime::RegistryNode*> entries =
        runtime::dispatch_snapshot(*s, stats_);
    for (runtime::RegistryNode* node : entries) {
        if (!node->attached || !node->extension->live) continue;
        ObjectInstance* ext = static_cast<ObjectInstance*>(node->extension);
        if (!behavior_defined(ext->cls, name)) continue;
        const MethodDecl* m = resolve_method(ext->cls, behavior_name);
        if (!m)
            runtime_error("R104", "class '" + ext->cls->name +
                                      "' lists behavior '" + name +
                                      "' in its meta block but defines no '" +
                                      behavior_name + "' method");
        barrier_.push_back({ext, {}});
        try {
            invoke(ext, *m, args);
        } catch (UserThrow&) {
            barrier_.pop_back();
            if (fatal_on_throw)
                runtime_error("R105", "behavior of '" + ext->cls->name +
                                          "' threw during dispatch of '" +
                                          name +
                                          "'; Pre_/Post_ behaviors must not "
                                          "veto");
            throw;  // Check-phase veto: propagates to the dispatch site
        } catch (...) {
            barrier_.pop_back();
            throw;
        }
        // allocations made by the behavior stay writable for the frame below
        BarrierFrame done = std::move(barrier_.back());
        barrier_.pop_back();
        if (!barrier_.empty())
            barrier_.back().allocated.merge(done.allocated);
    }
    return Value();
}

// ---------------------------------------------------------------------------
// evaluation

Value Interpreter::eval(const Expr& e, Frame& frame) {
    step();
    switch (e.kind) {
        case Expr::Kind::IntLit:
            return Value(e.int_val);
        case Expr::Kind::StrLit:
            return Value(e.str_val);
        case Expr::Kind::BoolLit:
            return Value(e.bool_val);
        case Expr::Kind::NullLit:
            return Value();
        case Expr::Kind::This:
            if (!frame.self)
                runtime_error("R104", "'this' used in a static context" +
                                          pos_text(e.line, e.col));
            return Value(frame.self);
        case Expr::Kind::Ident: {
            Value* v = lookup_var(frame, e.name);
            if (!v)
                runtime_error("R104", "unknown variable '" + e.name + "'" +
                                          pos_text(e.line, e.col));
            return *v;
        }
        case Expr::Kind::ListLit: {
            auto list = std::make_shared<ListObj>();
            list->items.reserve(e.args.size());
            for (const auto& a : e.args) list->items.push_back(eval(*a, frame));
            return Value(std::move(list));
        }
        case Expr::Kind::New: {
            std::vector<Value> args;
            args.reserve(e.args.size());
            for (const auto& a : e.args) args.push_back(eval(*a, frame));
            return make_instance(e.name, std::move(args));
        }
        case Expr::Kind::FieldAccess: {
            Value obj = eval(*e.object, frame);
            ObjectInstance* o = expect_live_object(obj, "field access");
            Value* slot = o->find_field(e.name);
            if (!slot)
                runtime_error("R104", "class '" + o->cls->name +
                                          "' has no field '" + e.name + "'" +
                                          pos_text(e.line, e.col));
            return *slot;
        }
        case Expr::Kind::MethodCall:
            return eval_method_call(e, frame);
        case Expr::Kind::Binary:
            return eval_binary(e, frame);
        case Expr::Kind::Not: {
            Value v = eval(*e.object, frame);
            if (!v.is_bool())
                runtime_error("R104", "'!' needs a boolean operand" +
                                          pos_text(e.line, e.col));
            return Value(!v.as_bool());
        }
        case Expr::Kind::Index: {
            Value obj = eval(*e.object, frame);
            Value idx = eval(*e.rhs, frame);
            if (!obj.is_list() || !idx.is_int())
                runtime_error("R104", "indexing needs a list and an integer" +
                                          pos_text(e.line, e.col));
            auto& items = obj.as_list()->items;
            long long i = idx.as_int();
            if (i < 0 || static_cast<std::size_t>(i) >= items.size())
                runtime_error("R104", "list index " + std::to_string(i) +
                                          " out of range" +
                                          pos_text(e.line, e.col));
            return items[static_cast<std::size_t>(i)];
        }
        case Expr::Kind::FreeCall:
            return eval_free_call(e, frame);
        case Expr::Kind::IntrinsicCall:
            return eval_intrinsic(e, frame);
        case Expr::Kind::CallEMethod:
        case Expr::Kind::ClasserTest:
        case Expr::Kind::ClasserCall:
            runtime_error("R104",
                          "ECO surface form reached the interpreter; run the "
                          "program through the pre-compiler" +
                              pos_text(e.line, e.col));
    }
    runtime_error("R104", "unreachable expression kind");
}

Value Interpreter::eval_binary(const Expr& e, Frame& frame) {
    // short-circuit forms first
    if (e.bin_op == BinOp::And || e.bin_op == BinOp::Or) {
        Value lhs = eval(*e.object, frame);
        if (!lhs.is_bool())
            runtime_error("R104", "'&&'/'||' need boolean operands" +
                                      pos_text(e.line, e.col));
        if (e.bin_op == BinOp::And && !lhs.as_bool()) return Value(false);
        if (e.bin_op == BinOp::Or && lhs.as_bool()) return Value(true);
        Value rhs = eval(*e.rhs, frame);
        if (!rhs.is_bool())
            runtime_error("R104", "'&&'/'||' need boolean operands" +
                                      pos_text(e.line, e.col));
        return rhs;
    }

    Value lhs = eval(*e.object, frame);
    Value rhs = eval(*e.rhs, frame);
    if (e.bin_op == BinOp::Eq) return Value(value_equal(lhs, rhs));
    if (e.bin_op == BinOp::NotEq) return Value(!value_equal(lhs, rhs));

    if (e.bin_op == BinOp::Add && lhs.is_str() && rhs.is_str())
        return Value(lhs.as_str() + rhs.as_str());

    if (!lhs.is_int() || !rhs.is_int())
        runtime_error("R104", "arithmetic needs integer operands" +
                                  pos_text(e.line, e.col));
    long long a = lhs.as_int();
    long long b = rhs.as_int();
    long long out = 0;
    switch (e.bin_op) {
        case BinOp::Lt: return Value(a < b);
        case BinOp::LtEq: return Value(a <= b);
        case BinOp::Gt: return Value(a > b);
        case BinOp::GtEq: return Value(a >= b);
        case BinOp::Add:
            if (__builtin_add_overflow(a, b, &out))
                runtime_error("R104", "integer overflow in '+'" +
                                          pos_text(e.line, e.col));
            return Value(out);
        case BinOp::Sub:
            if (__builtin_sub_overflow(a, b, &out))
                runtime_error("R104", "integer overflow in '-'" +
                                          pos_text(e.line, e.col));
            return Value(out);
        case BinOp::Mul:
            if (__builtin_mul_overflow(a, b, &out))
                runtime_error("R104", "integer overflow in '*'" +
                                          pos_text(e.line, e.col));
            return Value(out);
        case BinOp::Div:
            if (b == 0)
                runtime_error("R104",
                              "division by zero" + pos_text(e.line, e.col));
            if (a == std::numeric_limits<long long>::min() && b == -1)
                runtime_error("R104", "integer overflow in '/'" +
                                          pos_text(e.line, e.col));
            return Value(a / b);
        case BinOp::Mod:
            if (b == 0)
                runtime_error("R104",
                              "modulo by zero" + pos_text(e.line, e.col));
            if (a == std::numeric_limits<long long>::min() && b == -1)
                runtime_error("R104", "integer overflow in '%'" +
                                          pos_text(e.line, e.col));
            return Value(a % b);
        default:
            runtime_error("R104", "unreachable binary operator");
    }
}

Value Interpreter::call_builtin_list(const ListRef& list,
                                     const std::string& method,
                                     const std::vector<Value>& args, int line,
                                     int col) {
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            runtime_error("R104", "list." + method + " expects " +
                                      std::to_string(n) + " argument(s)" +
                                      pos_text(line, col));
    };
    auto index_arg = [&](const Value& v) {
        if (!v.is_int())
            runtime_error("R104", "list." + method + " needs an integer index" +
                                      pos_text(line, col));
        long long i = v.as_int();
        if (i < 0 || static_cast<std::size_t>(i) >= list->items.size())
            runtime_error("R104", "list index " + std::to_string(i) +
                                      " out of range" + pos_text(line, col));
        return static_cast<std::size_t>(i);
    };
    if (method == "push") {
        need(1);
        list->items.push_back(args[0]);
        return Value();
    }
    if (method == "size") {
        need(0);
        return Value(static_cast<long long>(list->items.size()));
    }
    if (method == "get") {
        need(1);
        return list->items[index_arg(args[0])];
    }
    if (method == "set") {
        need(2);
        list->items[index_arg(args[0])] = args[1];
        return Value();
    }
    if (method == "remove_at") {
        need(1);
        list->items.erase(list->items.begin() +
                          static_cast<std::ptrdiff_t>(index_arg(args[0])));
        return Value();
    }
    runtime_error("R104", "lists have no method '" + method + "'" +
                              pos_text(line, col));
}

Value Interpreter::eval_method_call(const Expr& e, Frame& frame) {
    // `Name.method(...)` where Name is not a variable is a static call
    if (e.object->kind == Expr::Kind::Ident &&
        !lookup_var(frame, e.object->name)) {
        if (find_class(e.object->name)) {
            std::vector<Value> args;
            args.reserve(e.args.size());
            for (const auto& a : e.args) args.push_back(eval(*a, frame));
            return call_static(e.object->name, e.name, std::move(args));
        }
        runtime_error("R104", "unknown variable '" + e.object->name + "'" +
                                  pos_text(e.object->line, e.object->col));
    }
    Value receiver = eval(*e.object, frame);
    std::vector<Value> args;
    args.reserve(e.args.size());
    for (const auto& a : e.args) args.push_back(eval(*a, frame));
    if (receiver.is_list())
        return call_builtin_list(receiver.as_list(), e.name, args, e.line,
                                 e.col);
    if (!receiver.is_object())
        runtime_error("R104", "method call on a non-object value" +
                                  pos_text(e.line, e.col));
    return call_method(receiver, e.name, std::move(args));
}

Value Interpreter::eval_free_call(const Expr& e, Frame& frame) {
    std::vector<Value> args;
    args.reserve(e.args.size());
    for (const auto& a : e.args) args.push_back(eval(*a, frame));
    if (e.name == "print") {
        if (args.size() != 1)
            runtime_error("R104",
                          "print expects 1 argument" + pos_text(e.line, e.col));
        stdout_ += value_to_display(args[0]);
        stdout_ += '\n';
        return Value();
    }
    if (e.name == "builtin_is_planar") {
        if (args.size() != 1 || !args[0].is_list())
            runtime_error("R104", "builtin_is_planar expects one edge list" +
                                      pos_text(e.line, e.col));
        std::vector<std::pair<long long, long long>> edges;
        for (const Value& item : args[0].as_list()->items) {
            if (!item.is_list() || item.as_list()->items.size() != 2 ||
                !item.as_list()->items[0].is_int() ||
                !item.as_list()->items[1].is_int())
                runtime_error("R104",
                              "builtin_is_planar needs a list of [u, v] pairs" +
                                  pos_text(e.line, e.col));
            edges.emplace_back(item.as_list()->items[0].as_int(),
                               item.as_list()->items[1].as_int());
        }
        return Value(builtin_is_planar(edges));
    }
    runtime_error("R104", "unknown function '" + e.name + "'" +
                              pos_text(e.line, e.col));
}

Value Interpreter::eval_intrinsic(const Expr& e, Frame& frame) {
    std::vector<Value> args;
    args.reserve(e.args.size());
    for (const auto& a : e.args) args.push_back(eval(*a, frame));
    auto string_arg = [&](std::size_t i) -> const std::string& {
        if (!args[i].is_str())
            runtime_error("R104", std::string(intrinsic_name(e.intrinsic)) +
                                      ": argument " + std::to_string(i + 1) +
                                      " must be a string" +
                                      pos_text(e.line, e.col));
        return args[i].as_str();
    };
    switch (e.intrinsic) {
        case Intrinsic::Attach: {
            if (!args[3].is_bool())
                runtime_error("R104", "eco_attach: argument 4 must be a "
                                      "boolean" +
                                          pos_text(e.line, e.col));
            eco_attach(args[0], args[1], string_arg(2), args[3].as_bool());
            return Value();
        }
        case Intrinsic::Detach:
            eco_detach(args[0]);
            return Value();
        case Intrinsic::Dispatch: {
            if (!args[2].is_list())
                runtime_error("R104", "eco_dispatch: argument 3 must be a "
                                      "list" +
                                          pos_text(e.line, e.col));
            return eco_dispatch(args[0], string_arg(1),
                                args[2].as_list()->items);
        }
        case Intrinsic::Has:
            return Value(eco_has(args[0], string_arg(1)));
        case Intrinsic::Get:
            return eco_get(args[0], string_arg(1));
        case Intrinsic::Destroy:
            eco_destroy(args[0]);
            return Value();
    }
    runtime_error("R104", "unreachable intrinsic");
}

void Interpreter::exec_block(const Block& b, Frame& frame) {
    frame.scopes.emplace_back();
    try {
        for (const auto& s : b.stmts) exec_stmt(*s, frame);
    } catch (...) {
        frame.scopes.pop_back();
        throw;
    }
    frame.scopes.pop_back();
}

void Interpreter::exec_stmt(const Stmt& s, Frame& frame) {
    step();
    switch (s.kind) {
        case Stmt::Kind::VarDecl:
            declare_var(frame, s.name, eval(*s.expr, frame), s.line, s.col);
            return;
        case Stmt::Kind::Assign: {
            switch (s.target->kind) {
                case Expr::Kind::Ident: {
                    Value* slot = lookup_var(frame, s.target->name);
                    if (!slot)
                        runtime_error("R104", "assignment to undeclared "
                                              "variable '" +
                                                  s.target->name + "'" +
                                                  pos_text(s.line, s.col));
                    *slot = eval(*s.expr, frame);
                    return;
                }
                case Expr::Kind::FieldAccess: {
                    Value obj = eval(*s.target->object, frame);
                    ObjectInstance* o =
                        expect_live_object(obj, "field assignment");
                    // the right-hand side could destroy the target object,
                    // so liveness and the slot are validated after it runs
                    Value v = eval(*s.expr, frame);
                    if (!o->live)
                        runtime_error("R104",
                                      "field assignment: use of a destroyed "
                                      "object" +
                                          pos_text(s.line, s.col));
                    Value* slot = o->find_field(s.target->name);
                    if (!slot)
                        runtime_error("R104", "class '" + o->cls->name +
                                                  "' has no field '" +
                                                  s.target->name + "'" +
                                                  pos_text(s.line, s.col));
                    check_field_write(o);
                    *slot = std::move(v);
                    return;
                }
                case Expr::Kind::Index: {
                    Value obj = eval(*s.target->object, frame);
                    Value idx = eval(*s.target->rhs, frame);
                    if (!obj.is_list() || !idx.is_int())
                        runtime_error("R104", "indexed assignment needs a "
                                              "list and an integer" +
                                                  pos_text(s.line, s.col));
                    // the right-hand side may mutate the list, so bounds are
                    // checked against its final size
                    Value v = eval(*s.expr, frame);
                    auto& items = obj.as_list()->items;
                    long long i = idx.as_int();
                    if (i < 0 ||
                        static_cast<std::size_t>(i) >= items.size())
                        runtime_error("R104", "list index " +
                                                  std::to_string(i) +
                                                  " out of range" +
                                                  pos_text(s.line, s.col));
                    items[static_cast<std::size_t>(i)] = std::move(v);
                    return;
                }
                default:
                    runtime_error("R104", "invalid assignment target" +
                                              pos_text(s.line, s.col));
            }
        }
        case Stmt::Kind::If: {
            Value cond = eval(*s.expr, frame);
            if (!cond.is_bool())
                runtime_error("R104", "'if' condition must be a boolean" +
                                          pos_text(s.line, s.col));
            if (cond.as_bool())
                exec_block(s.body, frame);
            else
                exec_block(s.else_body, frame);
            return;
        }
        case Stmt::Kind::While:
            for (;;) {
                Value cond = eval(*s.expr, frame);
                if (!cond.is_bool())
                    runtime_error("R104",
                                  "'while' condition must be a boolean" +
                                      pos_text(s.line, s.col));
                if (!cond.as_bool()) return;
                exec_block(s.body, frame);
            }
        case Stmt::Kind::Return:
            throw ReturnSignal{s.has_expr ? eval(*s.expr, frame) : Value()};
        case Stmt::Kind::Throw:
            throw UserThrow{eval(*s.expr, frame)};
        case Stmt::Kind::TryCatch:
            try {
                exec_block(s.body, frame);
            } catch (UserThrow& t) {
                frame.scopes.emplace_back();
                frame.scopes.back().vars.emplace_back(s.name,
                                                      std::move(t.value));
                try {
                    for (const auto& st : s.else_body.stmts)
                        exec_stmt(*st, frame);
                } catch (...) {
                    frame.scopes.pop_back();
                    throw;
                }
                frame.scopes.pop_back();
            }
            return;
        case Stmt::Kind::Delete:
            eco_destroy(eval(*s.expr, frame));
            return;
        case Stmt::Kind::ExprStmt:
            eval(*s.expr, frame);
            return;
    }
}

RunOutcome run_program(const std::string& core_text, const std::string& entry,
                       InterpreterOptions options) {
    RunOutcome out;
    CoreParseResult parsed = parse_core(core_text, "<core>");
    if (!parsed.ok()) {
        out.exit_code = 2;
        out.error_text = "runtime error[R104]: core text failed to parse";
        for (const Diagnostic& d : parsed.diags)
            out.error_text += "\n" + format_diagnostic(d);
        return out;
    }
    try {
        Interpreter interp(parsed.core, options);
        try {
            interp.call_static("Main", entry, {});
            out.exit_code = 0;
        } catch (const UserThrow& t) {
            out.exit_code = 1;
            out.error_text = "uncaught error: " + value_to_display(t.value);
        } catch (const RuntimeError& err) {
            out.exit_code = 2;
            out.error_text = "runtime error[" + err.code + "]: " + err.message;
        }
        out.stdout_text = interp.stdout_text();
    } catch (const RuntimeError& err) {
        // class table construction failed
        out.exit_code = 2;
        out.error_text = "runtime error[" + err.code + "]: " + err.message;
    }
    return out;
}

}  // namespace eco
