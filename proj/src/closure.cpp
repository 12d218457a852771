#include "twistcert/closure.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <deque>
#include <fstream>
#include <unordered_set>

#include "twistcert/errors.hpp"
#include "twistcert/twist_word.hpp"

namespace twistcert {

Packed4 pack4(const ModMatrix& m) {
  if (m.dim() != 4 || m.modulus() != 4) throw DimensionError("pack4 needs a 4x4 matrix mod 4");
  Packed4 p = 0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) p |= static_cast<Packed4>(m(r, c)) << (2 * (4 * r + c));
  return p;
}

ModMatrix unpack4(Packed4 p) {
  ModMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m.set(r, c, (p >> (2 * (4 * r + c))) & 3u);
  return m;
}

Packed4 mul4(Packed4 a, Packed4 b) {
  std::array<unsigned, 16> x{}, y{};
  for (unsigned k = 0; k < 16; ++k) {
    x[k] = (a >> (2 * k)) & 3u;
    y[k] = (b >> (2 * k)) & 3u;
  }
  Packed4 out = 0;
  for (unsigned r = 0; r < 4; ++r)
    for (unsigned c = 0; c < 4; ++c) {
      const unsigned s = x[4 * r] * y[c] + x[4 * r + 1] * y[4 + c] + x[4 * r + 2] * y[8 + c] + x[4 * r + 3] * y[12 + c];
      out |= static_cast<Packed4>(s & 3u) << (2 * (4 * r + c));
    }
  return out;
}

namespace {

std::size_t slot_of(Packed4 x, std::size_t mask) {
  std::uint64_t h = x * 0x9E3779B97F4A7C15ULL;
  return static_cast<std::size_t>(h >> 32) & mask;
}

}  // namespace

PackedSet::PackedSet(std::size_t expected) {
  std::size_t cap = 16;
  while (cap < 2 * expected) cap <<= 1;
  slots_.assign(cap, kEmpty);
}

bool PackedSet::insert(Packed4 x) {
  if (x == kEmpty) throw std::invalid_argument("PackedSet: reserved value");
  if (2 * (size_ + 1) > slots_.size()) grow();
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = slot_of(x, mask);; i = (i + 1) & mask) {
    if (slots_[i] == x) return false;
    if (slots_[i] == kEmpty) {
      slots_[i] = x;
      ++size_;
      return true;
    }
  }
}

bool PackedSet::contains(Packed4 x) const {
  if (x == kEmpty) return false;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = slot_of(x, mask);; i = (i + 1) & mask) {
    if (slots_[i] == x) return true;
    if (slots_[i] == kEmpty) return false;
  }
}

void PackedSet::grow() {
  std::vector<Packed4> old(slots_.size() * 2, kEmpty);
  old.swap(slots_);
  size_ = 0;
  for (Packed4 x : old)
    if (x != kEmpty) insert(x);
}

std::vector<Packed4> PackedSet::sorted() const {
  std::vector<Packed4> out;
  out.reserve(size_);
  for (Packed4 x : slots_)
    if (x != kEmpty) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

ClosureTable::ClosureTable(std::vector<Packed4> sorted_elements, std::vector<Packed4> generators)
    : elements_(std::move(sorted_elements)), generators_(std::move(generators)) {
  if (!std::is_sorted(elements_.begin(), elements_.end())) throw std::invalid_argument("closure: elements unsorted");
}

bool ClosureTable::contains(Packed4 x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

bool ClosureTable::contains(const IntMatrix& m) const { return contains(pack4(reduce_mod(m, 4))); }

std::vector<Packed4> closure_generators() {
  std::vector<Packed4> gens;
  const std::size_t g = 2;
  for (CurveKind k : {CurveKind::a, CurveKind::b})
    for (std::size_t i = 1; i <= g; ++i)
      for (std::int64_t e : {1, -1}) gens.push_back(pack4(reduce_mod(letter_power({k, i}, e, g), 4)));
  for (std::int64_t e : {2, -2}) gens.push_back(pack4(reduce_mod(letter_power({CurveKind::c, 1}, e, g), 4)));
  return gens;
}

ClosureTable quotient_closure_serial() {
  const auto gens = closure_generators();
  std::unordered_set<Packed4> seen{kIdentity4};
  std::deque<Packed4> queue{kIdentity4};
  while (!queue.empty()) {
    const Packed4 m = queue.front();
    queue.pop_front();
    for (Packed4 s : gens) {
      const Packed4 p = mul4(m, s);
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  std::vector<Packed4> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return ClosureTable(std::move(out), gens);
}

ClosureTable quotient_closure() {
  const auto gens = closure_generators();
  PackedSet seen(1 << 16);
  seen.insert(kIdentity4);
  std::vector<Packed4> frontier{kIdentity4};
  while (!frontier.empty()) {
    std::vector<Packed4> candidates;
#pragma omp parallel
    {
      std::vector<Packed4> local;
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(frontier.size()); ++i)
        for (Packed4 s : gens) {
          const Packed4 p = mul4(frontier[static_cast<std::size_t>(i)], s);
          if (!seen.contains(p)) local.push_back(p);
        }
#pragma omp critical
      candidates.insert(candidates.end(), local.begin(), local.end());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    frontier.clear();
    for (Packed4 p : candidates)
      if (seen.insert(p)) frontier.push_back(p);
  }
  return ClosureTable(seen.sorted(), gens);
}

bool generator_closed(const ClosureTable& t) {
  for (Packed4 m : t.elements())
    for (Packed4 s : t.generators())
      if (!t.contains(mul4(m, s))) return false;
  return t.contains(kIdentity4);
}

namespace {

constexpr char kMagic[8] = {'T', 'W', 'C', 'L', 'O', 'S', 'E', '\0'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ostream& os, T v) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <class T>
bool get(std::istream& is, T& v) {
  unsigned char buf[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(buf), sizeof(T))) return false;
  v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
  return true;
}

}  // namespace

void save_closure(const ClosureTable& t, const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write closure cache " + path);
  os.write(kMagic, sizeof kMagic);
  put<std::uint32_t>(os, kVersion);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(t.genus()));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(t.modulus()));
  put<std::uint32_t>(os, 0);
  put<std::uint64_t>(os, t.size());
  for (Packed4 x : t.elements()) put<std::uint32_t>(os, x);
  if (!os) throw std::runtime_error("failed writing closure cache " + path);
}

std::optional<ClosureTable> load_closure(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  char magic[8];
  if (!is.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof magic) != 0) return std::nullopt;
  std::uint32_t version, genus, modulus, reserved;
  std::uint64_t count;
  if (!get(is, version) || !get(is, genus) || !get(is, modulus) || !get(is, reserved) || !get(is, count))
    return std::nullopt;
  if (version != kVersion || genus != 2 || modulus != 4 || count == 0 || count > 737280) return std::nullopt;
  std::vector<Packed4> elems(count);
  for (auto& x : elems)
    if (!get(is, x)) return std::nullopt;
  char extra;
  if (is.read(&extra, 1)) return std::nullopt;
  if (!std::is_sorted(elems.begin(), elems.end()) ||
      std::adjacent_find(elems.begin(), elems.end()) != elems.end() ||
      !std::binary_search(elems.begin(), elems.end(), kIdentity4))
    return std::nullopt;
  return ClosureTable(std::move(elems), closure_generators());
}

ClosureTable closure_cached(const std::string& path) {
  if (!path.empty())
    if (auto t = load_closure(path)) return std::move(*t);
  ClosureTable t = quotient_closure();
  if (!path.empty()) {
    try {
      save_closure(t, path);
    } catch (const std::exception&) {
      // An unwritable cache only costs recomputation next time.
    }
  }
  return t;
}

Integer sp_order_mod_power_of_two(std::size_t g, unsigned k) {
  if (k == 0) throw ModulusError("modulus exponent must be at least 1");
  Integer order = 1;
  mpz_mul_2exp(order.get_mpz_t(), order.get_mpz_t(), g * g);
  for (std::size_t i = 1; i <= g; ++i) {
    Integer f = 1;
    mpz_mul_2exp(f.get_mpz_t(), f.get_mpz_t(), 2 * i);
    order *= f - 1;
  }
  mpz_mul_2exp(order.get_mpz_t(), order.get_mpz_t(), (k - 1) * g * (2 * g + 1));
  return order;
}

IndexResult gamma_index(const ClosureTable& t) {
  IndexResult r;
  r.group_order = sp_order_mod_power_of_two(2, 2);
  r.image_order = t.size();
  const Integer img(static_cast<unsigned long>(t.size()));
  if (!mpz_divisible_p(r.group_order.get_mpz_t(), img.get_mpz_t()))
    throw std::logic_error("closure size does not divide |Sp(4, Z/4)|");
  mpz_divexact(r.index.get_mpz_t(), r.group_order.get_mpz_t(), img.get_mpz_t());
  Integer bound = 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), 64);
  r.within_bound = r.index <= bound;
  r.multiple_of_20 = mpz_divisible_ui_p(r.index.get_mpz_t(), 20) != 0;
  return r;
}

}  // namespace twistcert
