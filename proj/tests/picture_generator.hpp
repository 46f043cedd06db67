// Random spectral pictures of direct sums of small model operators. Each block
// is placed far from the others, so every spectrum of the sum is the union of
// the block spectra and the eigenvalue data simply concatenates.
#ifndef WEYLKIT_TESTS_PICTURE_GENERATOR_HPP
#define WEYLKIT_TESTS_PICTURE_GENERATOR_HPP

#include <random>
#include <string>
#include <vector>

#include "weylkit/spectral_sets.hpp"

namespace gen {

using weylkit::Multiplicity;
using weylkit::Point;
using weylkit::Region;
using weylkit::SpectralPicture;

struct Block {
  std::string kind;
  std::vector<Region> sigma, sigma_a, sigma_e, sigma_w, sigma_uw, sigma_b;
  std::vector<weylkit::EigenEntry> eigen;
};

inline Block make_block(int kind, Point c, double r, std::mt19937_64& rng) {
  Block b;
  const Region point = Region::points({c});
  const Region disk = Region::disk(c, r);
  const Region circle = Region::circle(c, r);
  auto all = [&](const Region& x) { b.sigma = b.sigma_a = b.sigma_e = b.sigma_w = b.sigma_uw = b.sigma_b = {x}; };
  switch (kind) {
    case 0: {  // λ on a finite-dimensional space
      b.kind = "finite eigenvalue";
      b.sigma = b.sigma_a = {point};
      b.eigen.push_back({c, Multiplicity::of(1 + static_cast<long long>(rng() % 4))});
      break;
    }
    case 1:  // λ times the identity on an infinite-dimensional space
      b.kind = "infinite multiplicity";
      all(point);
      b.eigen.push_back({c, Multiplicity::inf()});
      break;
    case 2:  // c + rS, S the unilateral shift
      b.kind = "shift";
      b.sigma = b.sigma_w = b.sigma_b = {disk};
      b.sigma_a = b.sigma_e = b.sigma_uw = {circle};
      break;
    case 3:  // c + rS*
      b.kind = "backward shift";
      b.sigma = b.sigma_a = b.sigma_uw = b.sigma_w = b.sigma_b = {disk};
      b.sigma_e = {circle};
      break;
    case 4:  // c + r(S ⊕ S*)
      b.kind = "shift pair";
      b.sigma = b.sigma_a = b.sigma_b = {disk};
      b.sigma_e = b.sigma_w = b.sigma_uw = {circle};
      break;
    case 5: {  // c + diag(r/n)
      b.kind = "diagonal sequence";
      const Region seq = Region::reciprocal_sequence(weylkit::SequenceWithLimits::kMaxPrefix, c, r);
      b.sigma = b.sigma_a = {seq};
      b.sigma_e = b.sigma_uw = b.sigma_w = b.sigma_b = {point};
      for (std::size_t n = 1; n <= weylkit::SequenceWithLimits::kMaxPrefix; ++n)
        b.eigen.push_back({c + r / static_cast<double>(n), Multiplicity::of(1)});
      break;
    }
    case 6:  // c + compact injective weighted forward shift
      b.kind = "compact forward shift";
      all(point);
      b.eigen.push_back({c, Multiplicity::of(0)});
      break;
    default:  // c + compact weighted backward shift
      b.kind = "compact backward shift";
      all(point);
      b.eigen.push_back({c, Multiplicity::of(1)});
      break;
  }
  return b;
}

inline constexpr int kBlockKinds = 8;

/// One to four blocks at distinct grid positions, radii in [0.2, 1].
inline SpectralPicture random_picture(std::mt19937_64& rng, std::string label, std::vector<std::string>* kinds = nullptr) {
  std::uniform_int_distribution<int> count(1, 4), kind(0, kBlockKinds - 1);
  std::uniform_real_distribution<double> radius(0.2, 1.0);
  std::vector<Point> slots;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) slots.emplace_back(3.0 * i, 3.0 * j);
  std::shuffle(slots.begin(), slots.end(), rng);

  std::vector<Region> s, sa, se, sw, suw, sb;
  SpectralPicture p;
  p.label = std::move(label);
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    Block b = make_block(kind(rng), slots[static_cast<std::size_t>(k)], radius(rng), rng);
    if (kinds) kinds->push_back(b.kind);
    s.insert(s.end(), b.sigma.begin(), b.sigma.end());
    sa.insert(sa.end(), b.sigma_a.begin(), b.sigma_a.end());
    se.insert(se.end(), b.sigma_e.begin(), b.sigma_e.end());
    sw.insert(sw.end(), b.sigma_w.begin(), b.sigma_w.end());
    suw.insert(suw.end(), b.sigma_uw.begin(), b.sigma_uw.end());
    sb.insert(sb.end(), b.sigma_b.begin(), b.sigma_b.end());
    p.eigen.insert(p.eigen.end(), b.eigen.begin(), b.eigen.end());
  }
  auto join = [](std::vector<Region>& parts) {
    if (parts.empty()) return Region::empty();
    if (parts.size() == 1) return parts.front();
    return Region::union_of(std::move(parts));
  };
  p.sigma = join(s);
  p.sigma_a = join(sa);
  p.sigma_e = join(se);
  p.sigma_w = join(sw);
  p.sigma_uw = join(suw);
  p.sigma_b = join(sb);
  return p;
}

}  // namespace gen

#endif  // WEYLKIT_TESTS_PICTURE_GENERATOR_HPP
