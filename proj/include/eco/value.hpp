#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "eco/runtime.hpp"

namespace eco {

struct ListObj;
class ObjectInstance;
struct ClassRt;

using ListRef = std::shared_ptr<ListObj>;

// Interpreter datum. Int/Bool/Str/Null compare by value, List/Object by
// identity.
class Value {
public:
    Value() : data_(std::monostate{}) {}
    Value(long long v) : data_(v) {}
    Value(bool v) : data_(v) {}
    Value(std::string v) : data_(std::move(v)) {}
    Value(ListRef v) : data_(std::move(v)) {}
    Value(ObjectInstance* v) : data_(v) {}

    bool is_null() const { return std::holds_alternative<std::monostate>(data_); }
    bool is_int() const { return std::holds_alternative<long long>(data_); }
    bool is_bool() const { return std::holds_alternative<bool>(data_); }
    bool is_str() const { return std::holds_alternative<std::string>(data_); }
    bool is_list() const { return std::holds_alternative<ListRef>(data_); }
    bool is_object() const {
        return std::holds_alternative<ObjectInstance*>(data_);
    }

    long long as_int() const { return std::get<long long>(data_); }
    bool as_bool() const { return std::get<bool>(data_); }
    const std::string& as_str() const { return std::get<std::string>(data_); }
    const ListRef& as_list() const { return std::get<ListRef>(data_); }
    ObjectInstance* as_object() const {
        return std::get<ObjectInstance*>(data_);
    }

    friend bool value_equal(const Value& a, const Value& b);

private:
    std::variant<std::monostate, long long, bool, std::string, ListRef,
                 ObjectInstance*>
        data_;
};

struct ListObj {
    std::vector<Value> items;
};

class ObjectInstance : public runtime::ExtObject {
public:
    const ClassRt* cls = nullptr;
    std::vector<Value> field_slots;  // laid out by ClassRt::field_index
    long long serial = 0;  // allocation index, stable within one interpreter

    // slot lookup by name; nullptr when the class has no such field
    Value* find_field(const std::string& name);
};

bool value_equal(const Value& a, const Value& b);

// Textual form used by print: ints in decimal, bools as true/false, strings
// raw, null, lists as [a, b], objects as <ClassName#serial>.
std::string value_to_display(const Value& v);

}  // namespace eco
