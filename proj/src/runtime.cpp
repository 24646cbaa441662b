#include "eco/runtime.hpp"

namespace eco::runtime {

RegistryNode* ExtensionRegistry::append(ExtObject* extension,
                                        std::string type_name,
                                        bool is_classer,
                                        RegistryStats& stats) {
    if (is_classer) {
        auto it = classer_slots_.find(type_name);
        if (it != classer_slots_.end())
            runtime_error("R100", "classer '" + type_name +
                                      "' is already instantiated for this "
                                      "support object");
    }
    arena_.push_back(std::make_unique<RegistryNode>());
    RegistryNode* node = arena_.back().get();
    node->extension = extension;
    node->type_name = std::move(type_name);
    node->is_classer = is_classer;
    node->attached = true;
    ++stats.node_visits;  // the new node
    if (tail_) {
        ++stats.node_visits;  // the old tail
        tail_->next = node;
        node->prev = tail_;
        tail_ = node;
    } else {
        head_ = tail_ = node;
    }
    ++size_;
    if (node->is_classer) classer_slots_.emplace(node->type_name, node);
    return node;
}

void ExtensionRegistry::unlink(RegistryNode* node, RegistryStats& stats) {
    ++stats.node_visits;  // the node itself
    if (node->prev) {
        ++stats.node_visits;
        node->prev->next = node->next;
    } else {
        head_ = node->next;
    }
    if (node->next) {
        ++stats.node_visits;
        node->next->prev = node->prev;
    } else {
        tail_ = node->prev;
    }
    node->prev = node->next = nullptr;
    node->attached = false;
    --size_;
    if (node->is_classer) classer_slots_.erase(node->type_name);
}

RegistryNode* ExtensionRegistry::classer_slot(
    const std::string& type_name) const {
    auto it = classer_slots_.find(type_name);
    return it != classer_slots_.end() ? it->second : nullptr;
}

std::vector<RegistryNode*> ExtensionRegistry::snapshot(
    RegistryStats& stats) const {
    std::vector<RegistryNode*> out;
    out.reserve(size_);
    for (RegistryNode* node = head_; node; node = node->next) {
        ++stats.node_visits;
        out.push_back(node);
    }
    return out;
}

void attach(ExtObject& support, ExtObject& ext, const std::string& type_name,
            bool is_classer, RegistryStats& stats) {
    if (!support.live)
        runtime_error("R104", "attach to a destroyed support object");
    if (!ext.live) runtime_error("R104", "attach of a destroyed object");
    if (ext.membership)
        runtime_error("R104", "object is already attached to a support");
    ext.membership = support.registry.append(&ext, type_name, is_classer, stats);
    ext.support = &support;
}

void detach(ExtObject& ext, RegistryStats& stats) {
    if (!ext.membership || !ext.membership->attached)
        runtime_error("R104", "object is not attached to a support");
    if (!ext.registry.empty())
        runtime_error("R101",
                      "object still supports live extensions and cannot be "
                      "detached");
    ext.support->registry.unlink(ext.membership, stats);
    ext.membership = nullptr;
    ext.support = nullptr;
}

bool classer_present(const ExtObject& support, const std::string& type_name) {
    return support.registry.classer_slot(type_name) != nullptr;
}

ExtObject& classer_get(const ExtObject& support,
                       const std::string& type_name) {
    RegistryNode* node = support.registry.classer_slot(type_name);
    if (!node)
        runtime_error("R103", "classer '" + type_name +
                                  "' is not instantiated for this support "
                                  "object");
    return *node->extension;
}

void destroy(ExtObject& obj, RegistryStats& stats) {
    if (!obj.live) runtime_error("R104", "object is already destroyed");
    if (!obj.registry.empty())
        runtime_error("R101",
                      "object still supports live extensions and cannot be "
                      "destroyed");
    if (obj.membership && obj.membership->attached) detach(obj, stats);
    obj.live = false;
}

std::vector<RegistryNode*> dispatch_snapshot(ExtObject& support,
                                             RegistryStats& stats) {
    return support.registry.snapshot(stats);
}

}  // namespace eco::runtime
