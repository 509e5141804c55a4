#include "walshctl/walsh.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace walsh {

unsigned bit_width_of(unsigned value) {
  return value == 0 ? 1u : static_cast<unsigned>(std::bit_width(value));
}

PaleyIndex::PaleyIndex(unsigned v) {
  if (v > kMaxOrder) {
    throw std::invalid_argument("Paley order " + std::to_string(v) +
                                " exceeds the 8-bit maximum of 255");
  }
  value = static_cast<uint16_t>(v);
}

unsigned PaleyIndex::hamming() const {
  return static_cast<unsigned>(std::popcount(static_cast<unsigned>(value)));
}

int rademacher_eval(unsigned j, double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw std::domain_error("rademacher_eval: x must lie in [0,1)");
  }
  if (j > 30) {
    throw std::domain_error("rademacher_eval: order above 30 unsupported");
  }
  // Segment index on the 2^(j+1) grid; even -> 0, odd -> 1. No trigonometry.
  const auto seg = static_cast<uint64_t>(x * static_cast<double>(1ull << (j + 1)));
  return static_cast<int>(seg & 1u);
}

int walsh_eval(PaleyIndex l, double x, Variant variant) {
  int acc = 0;
  const unsigned m = l.bit_width();
  for (unsigned j = 0; j < m; ++j) {
    if (l.bit(j)) acc ^= rademacher_eval(j, x);
  }
  if (variant == Variant::complement) acc ^= 1;
  return acc;
}

namespace {

// Bit of W_l at segment i of the 2^m grid, standard variant.
// R_j picks bit (m-1-j) of the segment index.
inline int grid_bit(unsigned l, unsigned m, uint32_t i) {
  unsigned acc = 0;
  unsigned bits = l;
  unsigned j = 0;
  while (bits != 0) {
    if (bits & 1u) acc ^= (i >> (m - 1 - j)) & 1u;
    bits >>= 1;
    ++j;
  }
  return static_cast<int>(acc);
}

void check_grid(PaleyIndex l, unsigned m) {
  if (m > kMaxGridLog2) {
    throw std::invalid_argument("grid exponent above " +
                                std::to_string(kMaxGridLog2));
  }
  if (m < l.bit_width()) {
    throw std::invalid_argument(
        "grid exponent " + std::to_string(m) + " below the native width " +
        std::to_string(l.bit_width()) + " of order " + std::to_string(l.value));
  }
}

}  // namespace

BinaryWaveform sample_grid(PaleyIndex l, unsigned m, Variant variant) {
  check_grid(l, m);
  BinaryWaveform w;
  w.variant = variant;
  const uint32_t len = 1u << m;
  w.samples.resize(len);
  const int inv = variant == Variant::complement ? 1 : 0;
  for (uint32_t i = 0; i < len; ++i) {
    w.samples[i] = static_cast<uint8_t>(grid_bit(l.value, m, i) ^ inv);
  }
  return w;
}

SignedWaveform signed_samples(PaleyIndex l, unsigned m, Variant variant) {
  const BinaryWaveform b = sample_grid(l, m, variant);
  SignedWaveform s;
  s.samples.resize(b.samples.size());
  for (size_t i = 0; i < b.samples.size(); ++i) {
    s.samples[i] = static_cast<int8_t>(2 * b.samples[i] - 1);
  }
  return s;
}

std::vector<double> transition_points(PaleyIndex l) {
  std::vector<double> points;
  if (l.value == 0) return points;
  const unsigned m = l.bit_width();
  const uint32_t len = 1u << m;
  int prev = grid_bit(l.value, m, 0);
  for (uint32_t i = 1; i < len; ++i) {
    const int cur = grid_bit(l.value, m, i);
    if (cur != prev) {
      points.push_back(static_cast<double>(i) / static_cast<double>(len));
    }
    prev = cur;
  }
  return points;
}

unsigned hamming_order(PaleyIndex l) { return l.hamming(); }

bool thue_morse_member(PaleyIndex l) {
  return std::has_single_bit(static_cast<unsigned>(l.value) + 1u);
}

void fwht_inplace(std::span<double> data) {
  const size_t n = data.size();
  if (n == 0 || !std::has_single_bit(n)) {
    throw std::invalid_argument("fwht: length must be a power of two");
  }
  for (size_t half = 1; half < n; half <<= 1) {
    for (size_t base = 0; base < n; base += half << 1) {
      for (size_t i = base; i < base + half; ++i) {
        const double a = data[i];
        const double b = data[i + half];
        data[i] = a + b;
        data[i + half] = a - b;
      }
    }
  }
}

namespace {

uint32_t reverse_bits(uint32_t v, unsigned m) {
  uint32_t r = 0;
  for (unsigned j = 0; j < m; ++j) {
    r = (r << 1) | ((v >> j) & 1u);
  }
  return r;
}

}  // namespace

WalshSpectrum decompose(std::span<const double> signal) {
  const size_t n = signal.size();
  if (n == 0 || !std::has_single_bit(n)) {
    throw std::invalid_argument("decompose: length must be a power of two");
  }
  const unsigned m = static_cast<unsigned>(std::countr_zero(n));
  std::vector<double> work(signal.begin(), signal.end());
  fwht_inplace(work);
  WalshSpectrum spec;
  spec.weights.resize(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (uint32_t k = 0; k < n; ++k) {
    spec.weights[k] = work[reverse_bits(k, m)] * scale;
  }
  return spec;
}

std::vector<double> synthesize(const WalshSpectrum& spectrum, unsigned m) {
  const size_t nw = spectrum.weights.size();
  if (nw == 0 || !std::has_single_bit(nw)) {
    throw std::invalid_argument("synthesize: N must be a power of two");
  }
  if (m > kMaxGridLog2) {
    throw std::invalid_argument("synthesize: grid exponent above maximum");
  }
  const size_t n = size_t{1} << m;
  if (nw > n) {
    throw std::invalid_argument("synthesize: N exceeds the 2^m grid");
  }
  const unsigned mw = static_cast<unsigned>(std::countr_zero(nw));
  std::vector<double> work(n, 0.0);
  for (uint32_t k = 0; k < nw; ++k) {
    // Paley index k contributes at the bit-reversed transform slot. The
    // reversal is over the full m bits; low orders keep their low positions.
    work[reverse_bits(k, mw) << (m - mw)] = spectrum.weights[k];
  }
  fwht_inplace(work);
  return work;
}

double walsh_monomial_moment(PaleyIndex l, unsigned p, Variant variant,
                             bool* exact_zero) {
  const unsigned m = l.bit_width();
  if ((p + 1) * m > 120) {
    throw std::invalid_argument("moment degree/grid combination overflows");
  }
  const SignedWaveform s = signed_samples(l, m, variant);
  const uint64_t len = 1ull << m;
  // integral = sum_i s_i * ((i+1)^(p+1) - i^(p+1)) / ((p+1) * 2^(m(p+1)))
  __int128 num = 0;
  __int128 prev_pow = 0;
  for (uint64_t i = 0; i < len; ++i) {
    __int128 pow = 1;
    for (unsigned q = 0; q <= p; ++q) pow *= static_cast<__int128>(i + 1);
    num += static_cast<__int128>(s.samples[i]) * (pow - prev_pow);
    prev_pow = pow;
  }
  if (exact_zero != nullptr) *exact_zero = (num == 0);
  if (num == 0) return 0.0;
  const double den =
      static_cast<double>(p + 1) * std::pow(2.0, static_cast<double>(m) * (p + 1));
  return static_cast<double>(num) / den;
}

}  // namespace walsh
