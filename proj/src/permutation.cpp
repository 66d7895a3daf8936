#include "acdkit/permutation.hpp"

#include <cctype>
#include <numeric>

#include "acdkit/error.hpp"

namespace acdkit {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw std::invalid_argument("image array is not a permutation");
    }
    seen[p] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation result(images_.size());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  // (g^-1 x g)(g(i)) = g(x(i))
  Permutation r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[g[i]] = g[images_[i]];
  return r;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::extended(std::size_t degree) const { return shifted(0, degree); }

Permutation Permutation::shifted(std::size_t offset, std::size_t new_degree) const {
  if (offset + images_.size() > new_degree) throw std::invalid_argument("shift exceeds degree");
  Permutation r(new_degree);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    r.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  }
  return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in product");
  Permutation r(a.degree());
  for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

// Calls on_cycle(points) for every cycle in the text.
template <class F>
void scan_cycles(std::string_view text, F&& on_cycle) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation", i);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<long long> points;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("expected point index in cycle", i);
      }
      long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000'000LL) throw ParseError("point index too large", i);
        ++i;
      }
      points.push_back(v);
    }
    on_cycle(points, i);
    skip_ws();
  }
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> touched(degree, false);
  scan_cycles(text, [&](const std::vector<long long>& cyc, std::size_t pos) {
    for (long long p : cyc) {
      if (p < 0 || static_cast<std::size_t>(p) >= degree) {
        throw ParseError("point " + std::to_string(p) + " outside degree " + std::to_string(degree), pos);
      }
      if (touched[p]) throw ParseError("point " + std::to_string(p) + " repeated in cycles", pos);
      touched[p] = true;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      images[cyc[k]] = static_cast<Point>(cyc[(k + 1) % cyc.size()]);
    }
  });
  return Permutation(std::move(images));
}

long long max_point_in_cycles(std::string_view text) {
  long long best = -1;
  scan_cycles(text, [&](const std::vector<long long>& cyc, std::size_t) {
    for (long long p : cyc) best = std::max(best, p);
  });
  return best;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace acdkit
