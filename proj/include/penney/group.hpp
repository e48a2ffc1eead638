#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace penney {

/// A letter is an index into an alphabet of q letters, 0 <= index < q.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Alphabets are capped so letter sets fit a 32-bit mask.
inline constexpr std::size_t kMaxAlphabet = 32;

/// Subword w(i..j) with 1-based inclusive bounds.
Word subword(const Word& w, std::size_t i, std::size_t j);

class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidSpec unless `images` is a bijection on [0, images.size()).
  explicit Permutation(std::vector<Letter> images);

  static Permutation identity(std::size_t q);
  /// Parses disjoint-cycle notation on 0-based letters, e.g. "(0 1)(2 3)".
  static Permutation from_cycles(std::size_t q, std::string_view cycles);

  std::size_t degree() const { return images_.size(); }
  Letter operator()(Letter x) const { return images_[x]; }
  const std::vector<Letter>& images() const { return images_; }

  /// Composition: (a * b)(x) = a(b(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Bitmask of fixed letters.
  std::uint32_t fixed_mask() const;
  /// Hashable image string; unique per permutation of a fixed degree.
  std::string key() const { return std::string(images_.begin(), images_.end()); }
  std::string to_cycles() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Letter> images_;
};

/// Letterwise image g.w.
Word act(const Permutation& g, const Word& w);

/// Parsed form of the group DSL:
///   "S:<q>" | "Z:<q>" | "T:<q>" | "P:<spec>x<spec>..." | "G:<q>:(cycles)[,(cycles)...]"
struct GroupSpec {
  enum class Kind { Symmetric, Cyclic, Trivial, Product, Generators };

  Kind kind = Kind::Trivial;
  std::size_t q = 0;
  std::vector<GroupSpec> blocks;         // Product only, consecutive letter blocks
  std::vector<Permutation> generators;   // Generators only

  static GroupSpec parse(std::string_view text);
  static GroupSpec symmetric(std::size_t q);
  static GroupSpec cyclic(std::size_t q);
  static GroupSpec trivial(std::size_t q);
  std::string to_string() const;
};

/// A finite subgroup of S_q stored as an explicit element list.
///
/// Immutable after construction; every query is const and thread-safe.
class PermutationGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 3628800;  // 10!

  explicit PermutationGroup(const GroupSpec& spec,
                            std::size_t order_cap = kDefaultOrderCap);
  /// Convenience: parse the DSL and build.
  static PermutationGroup from_string(std::string_view spec,
                                      std::size_t order_cap = kDefaultOrderCap);

  std::size_t degree() const { return q_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const GroupSpec& spec() const { return spec_; }
  std::string name() const { return spec_.to_string(); }
  bool is_full_symmetric() const { return full_symmetric_; }
  bool is_cyclic_shift() const;

  bool contains(const Permutation& g) const;

  /// Sorted orbit G.w, enumerated breadth-first over the generators.
  std::vector<Word> orbit(const Word& w) const;
  std::size_t orbit_size(const Word& w) const;
  /// Lexicographically least member of G.w.
  Word canonical(const Word& w) const;
  /// |{g : g.w = w}|; depends only on the set of letters used by w.
  std::size_t stabilizer_order(const Word& w) const;
  std::size_t stabilizer_order_of_mask(std::uint32_t letter_mask) const;
  /// Number of orbit members agreeing with w on positions i..j (1-based).
  std::size_t substring_weight(const Word& w, std::size_t i, std::size_t j) const;
  /// True when some g maps x onto y letterwise.
  bool equivalent(const Word& x, const Word& y) const;
  /// Partition of the alphabet into orbits of single letters.
  std::vector<std::vector<Letter>> letter_orbits() const;

  void check_word(const Word& w) const;

  /// Same alphabet and same element set.
  bool operator==(const PermutationGroup& other) const;

 private:
  void finalize();

  GroupSpec spec_;
  std::size_t q_ = 0;
  std::vector<Permutation> elements_;    // sorted
  std::vector<Permutation> generators_;
  std::vector<std::size_t> stabilizer_by_mask_;
  bool full_symmetric_ = false;
};

std::uint32_t letter_mask(const Word& w);

}  // namespace penney
