#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace eco {

// Fatal runtime errors (R100..R105). Not catchable by ECO-mini try/catch;
// they terminate the program with exit code 2.
struct RuntimeError {
    std::string code;
    std::string message;
};

[[noreturn]] inline void runtime_error(const char* code,
                                       const std::string& message) {
    throw RuntimeError{code, message};
}

namespace runtime {

class ExtObject;
class ExtensionRegistry;

// Counts touches of registry nodes. attach/detach touch a constant number of
// nodes regardless of registry size; a dispatch snapshot touches exactly one
// node per current extension.
struct RegistryStats {
    std::uint64_t node_visits = 0;
};

struct RegistryNode {
    ExtObject* extension = nullptr;
    std::string type_name;
    bool is_classer = false;
    bool attached = false;
    RegistryNode* prev = nullptr;
    RegistryNode* next = nullptr;
};

// The live extension-objects of one support-object, in attach order, plus
// one slot per classer type. Nodes are arena-owned so that snapshots taken
// before a mid-dispatch detach stay valid.
class ExtensionRegistry {
public:
    RegistryNode* append(ExtObject* extension, std::string type_name,
                         bool is_classer, RegistryStats& stats);
    void unlink(RegistryNode* node, RegistryStats& stats);

    RegistryNode* classer_slot(const std::string& type_name) const;
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    // Attach-order walk; visits every current node once.
    std::vector<RegistryNode*> snapshot(RegistryStats& stats) const;

private:
    RegistryNode* head_ = nullptr;
    RegistryNode* tail_ = nullptr;
    std::size_t size_ = 0;
    std::map<std::string, RegistryNode*> classer_slots_;
    std::vector<std::unique_ptr<RegistryNode>> arena_;
};

// Base of every runtime object that can take part in the support/extension
// relation. The relation forms a forest: each object records its support and
// owns the registry of its own extensions.
class ExtObject {
public:
    virtual ~ExtObject() = default;

    ExtensionRegistry registry;
    RegistryNode* membership = nullptr;
    ExtObject* support = nullptr;
    bool live = true;
};

// Appends `ext` to the registry of `support`. R100 when a classer of this
// type is already present.
void attach(ExtObject& support, ExtObject& ext, const std::string& type_name,
            bool is_classer, RegistryStats& stats);

// Unlinks `ext` from its support. R101 when `ext` itself still supports live
// extensions.
void detach(ExtObject& ext, RegistryStats& stats);

bool classer_present(const ExtObject& support, const std::string& type_name);

// The unique live classer instance; R103 when absent.
ExtObject& classer_get(const ExtObject& support, const std::string& type_name);

// Detaches (when attached) and marks dead. R101 when the object still
// supports live extensions.
void destroy(ExtObject& obj, RegistryStats& stats);

// Entries to notify, in attach order. Exactly size() node visits. Callers
// must re-check `attached` and liveness per entry: behaviors may detach
// other entries mid-dispatch.
std::vector<RegistryNode*> dispatch_snapshot(ExtObject& support,
                                             RegistryStats& stats);

}  // namespace runtime
}  // namespace eco
