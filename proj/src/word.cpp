#include "zigzag/word.hpp"

#include <bit>
#include <charconv>

#include "zigzag/arith.hpp"

namespace zigzag {

namespace {

std::uint64_t low_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace

BinaryWord::BinaryWord(std::uint64_t bits, std::size_t length) {
    if (length > kMaxLength) throw PreconditionError("binary word longer than 64 symbols");
    bits_ = bits & low_mask(length);
    length_ = static_cast<std::uint8_t>(length);
}

BinaryWord BinaryWord::parse(std::string_view text) {
    if (text.size() > kMaxLength) throw ParseError("binary word longer than 64 symbols");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '-') {
            bits |= std::uint64_t{1} << i;
        } else if (text[i] != '+') {
            throw ParseError("binary word may contain only '+' and '-': '" + std::string(text) + "'");
        }
    }
    return BinaryWord(bits, text.size());
}

BinaryWord BinaryWord::repeat(Sign s, std::size_t count) {
    return BinaryWord(s == Sign::Minus ? low_mask(count) : 0, count);
}

BinaryWord BinaryWord::inserted(std::size_t pos, Sign s) const {
    if (pos > length_) throw PreconditionError("insert position out of range");
    std::uint64_t low = bits_ & low_mask(pos);
    std::uint64_t high = pos >= 64 ? 0 : (bits_ >> pos);
    if (length_ + 1u > kMaxLength) throw PreconditionError("binary word longer than 64 symbols");
    std::uint64_t mid = s == Sign::Minus ? (std::uint64_t{1} << pos) : 0;
    std::uint64_t shifted_high = pos + 1 >= 64 ? 0 : (high << (pos + 1));
    return BinaryWord(low | mid | shifted_high, length_ + 1u);
}

BinaryWord BinaryWord::erased(std::size_t pos) const {
    if (pos >= length_) throw PreconditionError("erase position out of range");
    std::uint64_t low = bits_ & low_mask(pos);
    std::uint64_t high = (pos + 1 >= 64) ? 0 : (bits_ >> (pos + 1));
    return BinaryWord(low | (high << pos), length_ - 1u);
}

BinaryWord BinaryWord::substr(std::size_t pos, std::size_t count) const {
    if (pos + count > length_) throw PreconditionError("substring out of range");
    std::uint64_t shifted = pos >= 64 ? 0 : (bits_ >> pos);
    return BinaryWord(shifted, count);
}

BinaryWord BinaryWord::operator+(const BinaryWord& tail) const {
    std::size_t n = length_ + tail.length_;
    if (n > kMaxLength) throw PreconditionError("concatenation longer than 64 symbols");
    std::uint64_t high = length_ >= 64 ? 0 : (tail.bits_ << length_);
    return BinaryWord(bits_ | high, n);
}

void BinaryWord::push_back(Sign s) { *this = inserted(length_, s); }

std::vector<Block> BinaryWord::blocks() const {
    std::vector<Block> out;
    for (std::size_t i = 0; i < length_; ++i) {
        Sign s = (*this)[i];
        if (!out.empty() && out.back().sign == s) {
            ++out.back().length;
        } else {
            out.push_back({s, 1});
        }
    }
    return out;
}

std::size_t BinaryWord::block_count() const {
    if (length_ == 0) return 0;
    // A block starts wherever a symbol differs from its predecessor.
    std::uint64_t changes = (bits_ ^ (bits_ << 1)) & low_mask(length_) & ~std::uint64_t{1};
    return 1 + static_cast<std::size_t>(std::popcount(changes));
}

std::string BinaryWord::str() const {
    std::string s(length_, '+');
    for (std::size_t i = 0; i < length_; ++i) s[i] = sign_char((*this)[i]);
    return s;
}

std::strong_ordering BinaryWord::operator<=>(const BinaryWord& o) const {
    if (length_ != o.length_) return length_ <=> o.length_;
    std::uint64_t diff = bits_ ^ o.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    int i = std::countr_zero(diff);
    return ((bits_ >> i) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& w) { return os << '"' << w.str() << '"'; }

std::size_t Composition::total() const {
    std::size_t t = 0;
    for (auto p : parts) t += p;
    return t;
}

Composition Composition::parse(std::string_view text) {
    Composition c;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc() || ptr != piece.data() + piece.size() || value == 0)
            throw ParseError("composition parts must be positive integers: '" + std::string(text) + "'");
        c.parts.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return c;
}

std::string Composition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

BinaryWord word_of_composition(const Composition& c) {
    if (c.parts.empty()) throw PreconditionError("empty composition");
    BinaryWord w;
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (c.parts[i] == 0) throw PreconditionError("composition parts must be positive");
        if (i) w.push_back(Sign::Minus);
        for (std::size_t k = 1; k < c.parts[i]; ++k) w.push_back(Sign::Plus);
    }
    return w;
}

Composition composition_of_word(const BinaryWord& w) {
    Composition c{{1}};
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Sign::Plus) {
            ++c.parts.back();
        } else {
            c.parts.push_back(1);
        }
    }
    return c;
}

const BinaryWord& Vertex::word() const {
    if (root_) throw PreconditionError("the root vertex has no binary word");
    return word_;
}

Vertex Vertex::parse(std::string_view text) {
    if (text == "@") return root();
    return Vertex(BinaryWord::parse(text));
}

std::string Vertex::str() const { return root_ ? "@" : word_.str(); }

std::strong_ordering Vertex::operator<=>(const Vertex& o) const {
    if (root_ || o.root_) return o.root_ <=> root_;
    return word_ <=> o.word_;
}

std::ostream& operator<<(std::ostream& os, const Vertex& v) { return os << v.str(); }

}  // namespace zigzag
