#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zigzag/word.hpp"

namespace zigzag {

struct Cluster {
    static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();

    Sign sign = Sign::Plus;
    std::uint32_t multiplicity = kInfinite;

    bool infinite() const { return multiplicity == kInfinite; }
    bool operator==(const Cluster&) const = default;
};

// Alternating signed clusters, at least one infinite. Encodes the coideal of all words
// that fit block by block into the clusters.
class Template {
public:
    // Validates alternation, positive finite multiplicities and the presence of an infinite cluster.
    explicit Template(std::vector<Cluster> clusters);

    // Grammar: whitespace-separated tokens "+3", "-*", ...
    static Template parse(std::string_view text);
    std::string str() const;

    const std::vector<Cluster>& clusters() const { return clusters_; }
    std::size_t size() const { return clusters_.size(); }
    const Cluster& operator[](std::size_t i) const { return clusters_[i]; }
    std::size_t infinite_count() const;

    // One-symbol cluster, not outermost, with two infinite neighbours.
    bool is_separating(std::size_t i) const;

    bool operator==(const Template&) const = default;

private:
    std::vector<Cluster> clusters_;
};

// Only separating clusters are finite.
bool is_finite_template(const Template& t);

// w fits into t: blocks b_1..b_|t| (possibly empty) with matching signs and
// lengths bounded by the multiplicities.
bool member(const Template& t, const BinaryWord& w);
// The root lies in every coideal.
bool member(const Template& t, const Vertex& v);

struct FlangeDecomposition {
    std::vector<BinaryWord> flange;   // a_0 .. a_k, a_0 and a_k possibly empty
    std::vector<Template> sections;   // t_1 .. t_k
};

// Flange words are the runs of finite non-separating clusters; sections are the maximal
// stretches between them. A finite template yields one section and empty flange words.
FlangeDecomposition flange_and_sections(const Template& t);

// Templates obtained by removing one symbol from a flange cluster; a vanished cluster
// merges its equal-signed neighbours. Sorted by rendering, deduplicated.
std::vector<Template> reduced_templates(const Template& t);

// Membership in J(t), the union of the coideals of the reduced templates.
bool member_J(const Template& t, const BinaryWord& w);
bool member_J(const Template& t, const Vertex& v);

// Unique decomposition w = a_0 + l_1 + a_1 + ... + l_k + a_k with l_i in the i-th section.
// Requires member(t, w) and !member_J(t, w).
std::vector<BinaryWord> inject(const Template& t, const BinaryWord& w);

// Number of decompositions of the form above, without the membership preconditions.
std::size_t count_decompositions(const FlangeDecomposition& fd, const BinaryWord& w);

// Reassembles a word from section components.
BinaryWord assemble(const FlangeDecomposition& fd, const std::vector<BinaryWord>& components);

// The word a_t together with a flag: when true the finite part of zeta(t) is exactly the
// set of words containing a_t. The flag is a sufficient condition only.
std::pair<BinaryWord, bool> single_generator_word(const Template& t);

// Word of t with every infinite cluster shortened to one symbol.
BinaryWord minimal_full_word(const Template& t);

}  // namespace zigzag
