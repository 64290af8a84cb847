#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace effbayes {

using Symbol = std::uint32_t;
/// A finite observation string; membership in a tree is checked where used.
using SampleString = std::vector<Symbol>;

std::string to_string(const SampleString& s);
bool is_prefix(const SampleString& p, const SampleString& s);

/// A computable tree T in N^<N without dead ends; paths are the sample space.
/// Cantor and Baire trees are the full binary / countably-branching trees;
/// Custom trees are rule-backed with finite branching; Extended is the
/// root-plus-countably-many-copies tree used by the reversal construction.
class SampleTree {
  public:
    enum class Kind { Cantor, Baire, Custom, Extended };

    static std::shared_ptr<const SampleTree> cantor();
    static std::shared_ptr<const SampleTree> baire();
    /// `kids(sigma)` must return a nonempty finite child list for every sigma
    /// it is asked about (no dead ends).
    static std::shared_ptr<const SampleTree> custom(std::function<std::vector<Symbol>(const SampleString&)> kids);
    static std::shared_ptr<const SampleTree> extended(std::shared_ptr<const SampleTree> base);

    Kind kind() const { return kind_; }
    bool contains(const SampleString& sigma) const;

    /// Child symbols of sigma, or nullopt when countably infinite
    /// (Baire nodes, and the Extended root).
    std::optional<std::vector<Symbol>> children(const SampleString& sigma) const;

    const SampleTree* base() const { return base_.get(); }

  private:
    explicit SampleTree(Kind k) : kind_(k) {}
    Kind kind_;
    std::shared_ptr<const SampleTree> base_;
    std::function<std::vector<Symbol>(const SampleString&)> kids_;
};

}  // namespace effbayes
