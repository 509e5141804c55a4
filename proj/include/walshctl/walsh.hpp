#ifndef WALSHCTL_WALSH_HPP
#define WALSHCTL_WALSH_HPP

#include <cstdint>
#include <span>
#include <vector>

// Walsh/Rademacher function layer in Paley ordering: evaluation by exact
// segment arithmetic, waveform sampling, transition extraction, and the
// fast Walsh-Hadamard transform with Paley reindexing.
namespace walsh {

inline constexpr unsigned kMaxOrder = 255;      // orders fit an 8-bit register
inline constexpr unsigned kMaxGridLog2 = 16;

// Bit width m of an order: position of the highest set bit plus one.
// The zero order counts as one bit so its native grid is well defined.
unsigned bit_width_of(unsigned value);

enum class Variant : uint8_t {
  standard,    // starts at 0; used for timing streams
  complement,  // bit-inverted; starts at 1; used for synthesis
};

// Paley-ordered Walsh index. The binary digits of the value select which
// Rademacher functions enter the modulo-2 sum.
struct PaleyIndex {
  uint16_t value = 0;

  PaleyIndex() = default;
  explicit PaleyIndex(unsigned v);

  bool bit(unsigned j) const { return (value >> j) & 1u; }
  unsigned hamming() const;
  unsigned bit_width() const { return bit_width_of(value); }
};

struct BinaryWaveform {
  std::vector<uint8_t> samples;  // one bit per grid segment; length 2^m
  Variant variant = Variant::standard;
};

struct SignedWaveform {
  std::vector<int8_t> samples;  // values in {-1,+1}, mapping b -> 2b-1
};

// Walsh spectrum over the first N Paley orders; N a power of two.
struct WalshSpectrum {
  std::vector<double> weights;
  double duration_s = 1.0;
};

// R_j(x) on [0,1): 0 on even segments of the 2^(j+1) grid, 1 on odd ones.
int rademacher_eval(unsigned j, double x);

// Modulo-2 sum of the Rademachers selected by l's bits; complement inverts.
int walsh_eval(PaleyIndex l, double x, Variant variant);

// Length-2^m sampling; oversampling beyond the native grid replicates bits.
BinaryWaveform sample_grid(PaleyIndex l, unsigned m, Variant variant);

// Same grid with the fixed mapping bit -> 2*bit - 1.
SignedWaveform signed_samples(PaleyIndex l, unsigned m, Variant variant);

// Bit-flip locations of the standard waveform on its native grid, in (0,1).
// These are the pulse times of the corresponding decoupling sequence.
std::vector<double> transition_points(PaleyIndex l);

// Popcount of the order: the error-suppression order of the sequence.
unsigned hamming_order(PaleyIndex l);

// Orders of the form 2^n - 1 (maximal Hamming weight for their bit width).
bool thue_morse_member(PaleyIndex l);

// In-place transform: out[k] = sum_i in[i] * (-1)^popcount(k & i).
// Self-inverse up to a factor of the length. Length must be a power of two.
void fwht_inplace(std::span<double> data);

// X_k = (1/2^m) sum_i signal_i * W_k(i), complement signed convention,
// computed by the fast transform with Paley (bit-reversal) reindexing.
WalshSpectrum decompose(std::span<const double> signal);

// b_i = sum_k X_k * W_k(i) on a 2^m grid; exact inverse of decompose.
std::vector<double> synthesize(const WalshSpectrum& spectrum, unsigned m);

// Integral over [0,1] of x^p against the signed waveform of order l.
// Evaluated with exact integer arithmetic over the native grid; a vanishing
// moment returns exactly 0.0 and sets *exact_zero when provided.
double walsh_monomial_moment(PaleyIndex l, unsigned p, Variant variant,
                             bool* exact_zero = nullptr);

}  // namespace walsh

#endif
