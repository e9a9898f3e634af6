#include "brickplan/bricks.hpp"

#include <algorithm>
#include <tuple>

#include "brickplan/errors.hpp"

namespace brickplan {

Inventory Inventory::standard() {
    return Inventory({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 6}, {1, 8}, {2, 2}, {2, 4}});
}

Inventory::Inventory(std::vector<BrickKind> kinds) : kinds_(std::move(kinds)) {
    if (kinds_.empty()) throw ValidationError("inventory must not be empty");
    for (const BrickKind& k : kinds_) {
        if (k.width != 1 && k.width != 2) {
            throw ValidationError("brick width must be 1 or 2, got " + std::to_string(k.width));
        }
        if (k.length < k.width) {
            throw ValidationError("brick length must be >= width (got " + std::to_string(k.width) +
                                  "x" + std::to_string(k.length) + ")");
        }
        l0_ = std::max(l0_, k.length);
        if (k.width == 1) strip_lengths_.push_back(k.length);
    }
    for (std::size_t i = 0; i < kinds_.size(); ++i) {
        for (std::size_t j = i + 1; j < kinds_.size(); ++j) {
            if (kinds_[i] == kinds_[j]) {
                throw ValidationError("duplicate brick kind " + std::to_string(kinds_[i].width) +
                                      "x" + std::to_string(kinds_[i].length));
            }
        }
    }
    if (!has_kind(1, 1)) {
        throw ValidationError("inventory must contain a 1x1 brick");
    }
}

int Inventory::kind_index(int width, int length) const {
    for (std::size_t i = 0; i < kinds_.size(); ++i) {
        if (kinds_[i].width == width && kinds_[i].length == length) return static_cast<int>(i);
    }
    return -1;
}

nlohmann::json Inventory::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const BrickKind& k : kinds_) j.push_back({{"width", k.width}, {"length", k.length}});
    return j;
}

Inventory Inventory::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("inventory JSON must be an array of {width, length}");
    std::vector<BrickKind> kinds;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("width") || !item.contains("length")) {
            throw ParseError("inventory entry must be {width, length}");
        }
        kinds.push_back({item.at("width").get<int>(), item.at("length").get<int>()});
    }
    return Inventory(std::move(kinds));
}

bool PlacementOrder::operator()(const Placement& a, const Placement& b) const {
    int ka = inv->kind_index(a.kind.width, a.kind.length);
    int kb = inv->kind_index(b.kind.width, b.kind.length);
    return std::tuple(a.z, a.y, a.x, ka, a.axis) < std::tuple(b.z, b.y, b.x, kb, b.axis);
}

void sort_placements(std::vector<Placement>& placements, const Inventory& inv) {
    std::sort(placements.begin(), placements.end(), PlacementOrder{&inv});
}

}  // namespace brickplan
