#include "penney/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "penney/errors.hpp"

namespace penney {

namespace {

constexpr std::size_t kMaskTableAlphabet = 16;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_size(std::string_view s, std::string_view context) {
  s = trim(s);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidSpec("expected an integer in '" + std::string(context) + "'");
  }
  return value;
}

void check_alphabet(std::size_t q, std::string_view context) {
  if (q < 1 || q > kMaxAlphabet) {
    throw InvalidSpec("alphabet size must be in [1, " + std::to_string(kMaxAlphabet) +
                      "] in '" + std::string(context) + "'");
  }
}

// Saturating factorial, used only to reject S_q above the cap before enumerating.
std::size_t factorial_capped(std::size_t n, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    if (f > cap / k) return cap + 1;
    f *= k;
  }
  return f;
}

Permutation shift(std::size_t q, std::size_t k, std::size_t offset = 0, std::size_t total = 0) {
  if (total == 0) total = q;
  std::vector<Letter> images(total);
  std::iota(images.begin(), images.end(), Letter{0});
  for (std::size_t x = 0; x < q; ++x) {
    images[offset + x] = static_cast<Letter>(offset + (x + k) % q);
  }
  return Permutation(std::move(images));
}

// Embed a permutation of a block into the full alphabet.
Permutation lift(const Permutation& p, std::size_t offset, std::size_t total) {
  std::vector<Letter> images(total);
  std::iota(images.begin(), images.end(), Letter{0});
  for (std::size_t x = 0; x < p.degree(); ++x) {
    images[offset + x] = static_cast<Letter>(offset + p(static_cast<Letter>(x)));
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> closure(std::size_t q, const std::vector<Permutation>& gens,
                                 std::size_t cap) {
  std::vector<Permutation> out{Permutation::identity(q)};
  std::unordered_set<std::string> seen{out.front().key()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = g * out[head];
      if (seen.insert(next.key()).second) {
        if (out.size() >= cap) {
          throw OrderCapExceeded("group closure exceeds order cap " + std::to_string(cap));
        }
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace

Word subword(const Word& w, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > w.size()) {
    throw InvalidArgument("subword bounds out of range");
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(i - 1),
              w.begin() + static_cast<std::ptrdiff_t>(j));
}

std::uint32_t letter_mask(const Word& w) {
  std::uint32_t mask = 0;
  for (Letter x : w) mask |= 1u << x;
  return mask;
}

// --- Permutation -----------------------------------------------------------

Permutation::Permutation(std::vector<Letter> images) : images_(std::move(images)) {
  if (images_.size() > kMaxAlphabet) throw InvalidSpec("permutation degree too large");
  std::uint32_t seen = 0;
  for (Letter x : images_) {
    if (x >= images_.size() || (seen >> x) & 1u) {
      throw InvalidSpec("permutation is not a bijection");
    }
    seen |= 1u << x;
  }
}

Permutation Permutation::identity(std::size_t q) {
  std::vector<Letter> images(q);
  std::iota(images.begin(), images.end(), Letter{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t q, std::string_view text) {
  std::vector<Letter> images(q);
  std::iota(images.begin(), images.end(), Letter{0});
  std::uint32_t touched = 0;
  text = trim(text);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw InvalidSpec("expected '(' in cycle notation");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw InvalidSpec("unterminated cycle");
    std::vector<Letter> cycle;
    std::istringstream in{std::string(text.substr(pos + 1, close - pos - 1))};
    std::string token;
    while (in >> token) {
      std::size_t x = parse_size(token, text);
      if (x >= q) throw InvalidSpec("cycle letter " + token + " outside alphabet");
      if ((touched >> x) & 1u) throw InvalidSpec("cycles are not disjoint");
      touched |= 1u << x;
      cycle.push_back(static_cast<Letter>(x));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    pos = close + 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<Letter> images(rhs.images_.size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = images_[rhs.images_[x]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Letter> images(images_.size());
  for (std::size_t x = 0; x < images.size(); ++x) images[images_[x]] = static_cast<Letter>(x);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::uint32_t Permutation::fixed_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] == x) mask |= 1u << x;
  }
  return mask;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Word act(const Permutation& g, const Word& w) {
  Word out(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out[k] = g(w[k]);
  return out;
}

// --- GroupSpec -------------------------------------------------------------

GroupSpec GroupSpec::symmetric(std::size_t q) { return {Kind::Symmetric, q, {}, {}}; }
GroupSpec GroupSpec::cyclic(std::size_t q) { return {Kind::Cyclic, q, {}, {}}; }
GroupSpec GroupSpec::trivial(std::size_t q) { return {Kind::Trivial, q, {}, {}}; }

GroupSpec GroupSpec::parse(std::string_view text) {
  text = trim(text);
  if (text.size() < 3 || text[1] != ':') {
    throw InvalidSpec("malformed group spec '" + std::string(text) + "'");
  }
  const char tag = text[0];
  std::string_view body = text.substr(2);
  GroupSpec spec;
  switch (tag) {
    case 'S':
    case 'Z':
    case 'T': {
      spec.q = parse_size(body, text);
      check_alphabet(spec.q, text);
      spec.kind = tag == 'S' ? Kind::Symmetric : tag == 'Z' ? Kind::Cyclic : Kind::Trivial;
      return spec;
    }
    case 'P': {
      spec.kind = Kind::Product;
      std::size_t start = 0;
      while (start <= body.size()) {
        auto sep = body.find('x', start);
        auto piece = body.substr(start, sep == std::string_view::npos ? body.npos : sep - start);
        GroupSpec block = parse(piece);
        if (block.kind == Kind::Product) throw InvalidSpec("nested products are not supported");
        spec.q += block.q;
        spec.blocks.push_back(std::move(block));
        if (sep == std::string_view::npos) break;
        start = sep + 1;
      }
      check_alphabet(spec.q, text);
      return spec;
    }
    case 'G': {
      spec.kind = Kind::Generators;
      auto colon = body.find(':');
      spec.q = parse_size(body.substr(0, colon), text);
      check_alphabet(spec.q, text);
      if (colon == std::string_view::npos) return spec;
      std::string_view rest = body.substr(colon + 1);
      std::size_t start = 0;
      while (start <= rest.size()) {
        auto sep = rest.find(',', start);
        auto piece = trim(rest.substr(start, sep == std::string_view::npos ? rest.npos : sep - start));
        if (!piece.empty()) spec.generators.push_back(Permutation::from_cycles(spec.q, piece));
        if (sep == std::string_view::npos) break;
        start = sep + 1;
      }
      return spec;
    }
    default:
      throw InvalidSpec("unknown group kind '" + std::string(1, tag) + "'");
  }
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Symmetric: return "S:" + std::to_string(q);
    case Kind::Cyclic: return "Z:" + std::to_string(q);
    case Kind::Trivial: return "T:" + std::to_string(q);
    case Kind::Product: {
      std::string out = "P:";
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) out += 'x';
        out += blocks[b].to_string();
      }
      return out;
    }
    case Kind::Generators: {
      std::string out = "G:" + std::to_string(q) + ":";
      for (std::size_t g = 0; g < generators.size(); ++g) {
        if (g) out += ',';
        out += generators[g].to_cycles();
      }
      return out;
    }
  }
  return {};
}

// --- PermutationGroup ------------------------------------------------------

PermutationGroup::PermutationGroup(const GroupSpec& spec, std::size_t order_cap)
    : spec_(spec), q_(spec.q) {
  check_alphabet(q_, spec.to_string());
  switch (spec.kind) {
    case GroupSpec::Kind::Symmetric: {
      if (factorial_capped(q_, order_cap) > order_cap) {
        throw OrderCapExceeded("|S_" + std::to_string(q_) + "| exceeds order cap " +
                               std::to_string(order_cap));
      }
      auto images = Permutation::identity(q_).images();
      do {
        elements_.emplace_back(images);
      } while (std::next_permutation(images.begin(), images.end()));
      if (q_ >= 2) {
        generators_.push_back(shift(q_, 1));
        generators_.push_back(Permutation::from_cycles(q_, "(0 1)"));
      }
      break;
    }
    case GroupSpec::Kind::Cyclic: {
      if (q_ > order_cap) throw OrderCapExceeded("cyclic group exceeds order cap");
      for (std::size_t k = 0; k < q_; ++k) elements_.push_back(shift(q_, k));
      if (q_ >= 2) generators_.push_back(shift(q_, 1));
      break;
    }
    case GroupSpec::Kind::Trivial:
      elements_.push_back(Permutation::identity(q_));
      break;
    case GroupSpec::Kind::Product: {
      elements_.push_back(Permutation::identity(q_));
      std::size_t offset = 0;
      for (const auto& block_spec : spec.blocks) {
        PermutationGroup block(block_spec, order_cap);
        if (elements_.size() * block.order() > order_cap) {
          throw OrderCapExceeded("product group exceeds order cap " + std::to_string(order_cap));
        }
        std::vector<Permutation> next;
        next.reserve(elements_.size() * block.order());
        for (const auto& e : elements_) {
          for (const auto& b : block.elements()) next.push_back(lift(b, offset, q_) * e);
        }
        elements_ = std::move(next);
        for (const auto& g : block.generators()) generators_.push_back(lift(g, offset, q_));
        offset += block.degree();
      }
      break;
    }
    case GroupSpec::Kind::Generators:
      for (const auto& g : spec.generators) {
        if (g.degree() != q_) throw InvalidSpec("generator degree does not match alphabet");
        if (!g.is_identity()) generators_.push_back(g);
      }
      elements_ = closure(q_, generators_, order_cap);
      break;
  }
  finalize();
}

PermutationGroup PermutationGroup::from_string(std::string_view spec, std::size_t order_cap) {
  return PermutationGroup(GroupSpec::parse(spec), order_cap);
}

void PermutationGroup::finalize() {
  std::sort(elements_.begin(), elements_.end());
  full_symmetric_ = factorial_capped(q_, elements_.size()) == elements_.size();

  // Stabilizer of a letter set = number of elements whose fixed set contains it;
  // a superset-sum over fixed masks gives every letter set at once. Large
  // alphabets skip the table and count on demand.
  if (q_ > kMaskTableAlphabet) return;
  const std::size_t masks = std::size_t{1} << q_;
  stabilizer_by_mask_.assign(masks, 0);
  for (const auto& g : elements_) ++stabilizer_by_mask_[g.fixed_mask()];
  for (std::size_t bit = 0; bit < q_; ++bit) {
    for (std::size_t m = 0; m < masks; ++m) {
      if (!((m >> bit) & 1u)) stabilizer_by_mask_[m] += stabilizer_by_mask_[m | (std::size_t{1} << bit)];
    }
  }
}

bool PermutationGroup::is_cyclic_shift() const {
  return order() == q_ && contains(shift(q_, q_ > 1 ? 1 : 0));
}

bool PermutationGroup::contains(const Permutation& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

void PermutationGroup::check_word(const Word& w) const {
  for (Letter x : w) {
    if (x >= q_) throw InvalidArgument("letter outside the group's alphabet");
  }
}

std::vector<Word> PermutationGroup::orbit(const Word& w) const {
  check_word(w);
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word current = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators_) {
      Word next = act(g, current);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::size_t PermutationGroup::orbit_size(const Word& w) const {
  check_word(w);
  return order() / stabilizer_order(w);
}

Word PermutationGroup::canonical(const Word& w) const {
  check_word(w);
  if (full_symmetric_) {
    // Relabel letters in order of first appearance.
    std::vector<int> label(q_, -1);
    Letter next = 0;
    Word out(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (label[w[k]] < 0) label[w[k]] = next++;
      out[k] = static_cast<Letter>(label[w[k]]);
    }
    return out;
  }
  Word best = w;
  for (const auto& g : elements_) {
    // Lazy lexicographic comparison of g.w against the current best.
    for (std::size_t k = 0; k < w.size(); ++k) {
      Letter x = g(w[k]);
      if (x < best[k]) {
        best = act(g, w);
        break;
      }
      if (x > best[k]) break;
    }
  }
  return best;
}

std::size_t PermutationGroup::stabilizer_order(const Word& w) const {
  check_word(w);
  return stabilizer_order_of_mask(letter_mask(w));
}

std::size_t PermutationGroup::stabilizer_order_of_mask(std::uint32_t mask) const {
  if (!stabilizer_by_mask_.empty()) return stabilizer_by_mask_[mask];
  std::size_t count = 0;
  for (const auto& g : elements_) {
    if ((g.fixed_mask() & mask) == mask) ++count;
  }
  return count;
}

std::size_t PermutationGroup::substring_weight(const Word& w, std::size_t i,
                                               std::size_t j) const {
  Word x = subword(w, i, j);
  return stabilizer_order(x) / stabilizer_order(w);
}

bool PermutationGroup::equivalent(const Word& x, const Word& y) const {
  if (x.size() != y.size()) return false;
  // The required letter map x[k] -> y[k] must be a partial bijection.
  std::vector<int> forward(q_, -1), backward(q_, -1);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] >= q_ || y[k] >= q_) throw InvalidArgument("letter outside the group's alphabet");
    if (forward[x[k]] < 0 && backward[y[k]] < 0) {
      forward[x[k]] = y[k];
      backward[y[k]] = x[k];
    } else if (forward[x[k]] != y[k] || backward[y[k]] != x[k]) {
      return false;
    }
  }
  if (full_symmetric_) return true;
  for (const auto& g : elements_) {
    bool ok = true;
    for (std::size_t a = 0; a < q_ && ok; ++a) {
      if (forward[a] >= 0 && g(static_cast<Letter>(a)) != forward[a]) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

std::vector<std::vector<Letter>> PermutationGroup::letter_orbits() const {
  std::vector<int> block(q_, -1);
  std::vector<std::vector<Letter>> out;
  for (std::size_t a = 0; a < q_; ++a) {
    if (block[a] >= 0) continue;
    std::vector<Letter> members;
    std::uint32_t mask = 0;
    for (const auto& g : elements_) mask |= 1u << g(static_cast<Letter>(a));
    for (std::size_t b = 0; b < q_; ++b) {
      if ((mask >> b) & 1u) {
        block[b] = static_cast<int>(out.size());
        members.push_back(static_cast<Letter>(b));
      }
    }
    out.push_back(std::move(members));
  }
  return out;
}

bool PermutationGroup::operator==(const PermutationGroup& other) const {
  return q_ == other.q_ && elements_ == other.elements_;
}

}  // namespace penney
