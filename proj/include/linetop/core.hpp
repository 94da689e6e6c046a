#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace linetop {

/// Vertex identifier, dense in [0, n) within a Space.
using PointId = int;

enum class Errc {
    SelfLoop,
    DuplicateEdge,
    IsolatedVertex,
    EmptyBasisSet,
    BasisDoesNotCover,
    OutOfRange,
    NotInGround,
    GroundDisconnected,
    SingletonGround,
    PreconditionViolated,
    LemmaViolated,
    AnchorDoesNotSplit,
    NotTotalOrder,
    ComponentNotOrderable,
    UnknownFamily,
    FamilyTooLarge,
    BadParams,
    NotBetweennessRealizable,
    ValueOutsideCodomain,
    BoundaryNotTwo,
    NoPierceableSubset,
    OverlapInconsistent,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::IsolatedVertex: return "IsolatedVertex";
        case Errc::EmptyBasisSet: return "EmptyBasisSet";
        case Errc::BasisDoesNotCover: return "BasisDoesNotCover";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::NotInGround: return "NotInGround";
        case Errc::GroundDisconnected: return "GroundDisconnected";
        case Errc::SingletonGround: return "SingletonGround";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::LemmaViolated: return "LemmaViolated";
        case Errc::AnchorDoesNotSplit: return "AnchorDoesNotSplit";
        case Errc::NotTotalOrder: return "NotTotalOrder";
        case Errc::ComponentNotOrderable: return "ComponentNotOrderable";
        case Errc::UnknownFamily: return "UnknownFamily";
        case Errc::FamilyTooLarge: return "FamilyTooLarge";
        case Errc::BadParams: return "BadParams";
        case Errc::NotBetweennessRealizable: return "NotBetweennessRealizable";
        case Errc::ValueOutsideCodomain: return "ValueOutsideCodomain";
        case Errc::BoundaryNotTwo: return "BoundaryNotTwo";
        case Errc::NoPierceableSubset: return "NoPierceableSubset";
        case Errc::OverlapInconsistent: return "OverlapInconsistent";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

/// AnchorDoesNotSplit with the observed component count attached.
class AnchorError : public Error {
public:
    AnchorError(int count, const std::string& msg)
        : Error(Errc::AnchorDoesNotSplit, msg), count_(count) {}
    int count() const { return count_; }

private:
    int count_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

/// Set of vertices with deterministic ascending iteration.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<PointId> ids) : ids_(std::move(ids)) { normalize(); }
    VertexSet(std::initializer_list<PointId> ids) : ids_(ids) { normalize(); }

    /// {0, 1, ..., n-1}
    static VertexSet full(int n) {
        std::vector<PointId> v(static_cast<std::size_t>(n > 0 ? n : 0));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
        VertexSet s;
        s.ids_ = std::move(v);
        return s;
    }

    bool contains(PointId v) const {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }
    /// Position of v in ascending order, -1 when absent.
    int index_of(PointId v) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) return -1;
        return static_cast<int>(it - ids_.begin());
    }

    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }
    const std::vector<PointId>& ids() const { return ids_; }
    PointId min() const { return ids_.front(); }
    PointId max() const { return ids_.back(); }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    void insert(PointId v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) ids_.insert(it, v);
    }
    void erase(PointId v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it != ids_.end() && *it == v) ids_.erase(it);
    }

    bool subset_of(const VertexSet& o) const {
        return std::includes(o.ids_.begin(), o.ids_.end(), ids_.begin(), ids_.end());
    }
    bool intersects(const VertexSet& o) const {
        auto a = ids_.begin();
        auto b = o.ids_.begin();
        while (a != ids_.end() && b != o.ids_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return true;
        }
        return false;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(ids_[i]);
        }
        out += "}";
        return out;
    }

private:
    void normalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    std::vector<PointId> ids_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<PointId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    std::vector<PointId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    std::vector<PointId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

}  // namespace linetop
