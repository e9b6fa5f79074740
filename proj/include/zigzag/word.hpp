#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace zigzag {

enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

constexpr Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// A maximal run of equal symbols.
struct Block {
    Sign sign;
    std::size_t length;
    bool operator==(const Block&) const = default;
};

// Word over {+,-} packed into a 64-bit mask; bit i set means symbol i is '-'.
// The empty word is the one-box zigzag.
class BinaryWord {
public:
    static constexpr std::size_t kMaxLength = 64;

    BinaryWord() = default;
    BinaryWord(std::uint64_t bits, std::size_t length);

    // Accepts '+' and '-' only; throws ParseError otherwise.
    static BinaryWord parse(std::string_view text);
    static BinaryWord repeat(Sign s, std::size_t count);

    std::size_t size() const { return length_; }
    bool empty() const { return length_ == 0; }
    std::uint64_t bits() const { return bits_; }

    Sign operator[](std::size_t i) const {
        return ((bits_ >> i) & 1u) ? Sign::Minus : Sign::Plus;
    }

    BinaryWord inserted(std::size_t pos, Sign s) const;
    BinaryWord erased(std::size_t pos) const;
    BinaryWord substr(std::size_t pos, std::size_t count) const;
    BinaryWord operator+(const BinaryWord& tail) const;
    void push_back(Sign s);

    std::vector<Block> blocks() const;
    std::size_t block_count() const;
    std::string str() const;

    bool operator==(const BinaryWord& o) const {
        return length_ == o.length_ && bits_ == o.bits_;
    }
    // Length first, then lexicographic with '+' < '-'.
    std::strong_ordering operator<=>(const BinaryWord& o) const;

private:
    std::uint64_t bits_ = 0;
    std::uint8_t length_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BinaryWord& w);

// Strictly positive parts.
struct Composition {
    std::vector<std::size_t> parts;

    std::size_t total() const;
    static Composition parse(std::string_view text);  // "3,1,1,4"
    std::string str() const;
    bool operator==(const Composition&) const = default;
};

BinaryWord word_of_composition(const Composition& c);
Composition composition_of_word(const BinaryWord& w);

// Either the level-0 root or a zigzag given by its binary word.
class Vertex {
public:
    Vertex() = default;  // root
    Vertex(BinaryWord w) : root_(false), word_(w) {}  // NOLINT: implicit by design of the API
    static Vertex root() { return Vertex(); }

    bool is_root() const { return root_; }
    const BinaryWord& word() const;
    std::size_t level() const { return root_ ? 0 : word_.size() + 1; }

    // "@" for the root.
    static Vertex parse(std::string_view text);
    std::string str() const;

    bool operator==(const Vertex& o) const {
        return root_ == o.root_ && (root_ || word_ == o.word_);
    }
    std::strong_ordering operator<=>(const Vertex& o) const;

private:
    bool root_ = true;
    BinaryWord word_;
};

std::ostream& operator<<(std::ostream& os, const Vertex& v);

}  // namespace zigzag

template <>
struct std::hash<zigzag::BinaryWord> {
    std::size_t operator()(const zigzag::BinaryWord& w) const noexcept {
        std::uint64_t h = w.bits() * 0x9E3779B97F4A7C15ull;
        return static_cast<std::size_t>(h ^ (static_cast<std::uint64_t>(w.size()) << 57) ^ (h >> 29));
    }
};

template <>
struct std::hash<zigzag::Vertex> {
    std::size_t operator()(const zigzag::Vertex& v) const noexcept {
        return v.is_root() ? 0x5bd1e995u : std::hash<zigzag::BinaryWord>{}(v.word());
    }
};
