#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace entkit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// States live on 1..4 qubits; 4 is needed for two-pair protocols.
inline constexpr int kMaxQubits = 4;

inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kBranchEps = 1e-14;

/// Invalid inputs (constructor invariant violations, bad arguments).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A built-in consistency check failed at runtime (maps to CLI exit code 2).
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Side { Alice, Bob };

std::string to_string(Side side);

// Qubit ordering is big-endian: qubit 0 is the leftmost ket symbol, i.e. the
// most significant bit of a basis index.
//
// Bit q of alice_mask set means qubit q belongs to Alice.
struct Bipartition {
  std::uint32_t alice_mask = 0;

  bool is_alice(int qubit) const { return (alice_mask >> qubit) & 1u; }
  std::vector<int> alice_qubits(int n_qubits) const;
  std::vector<int> bob_qubits(int n_qubits) const;
  std::vector<int> side_qubits(Side side, int n_qubits) const;
  int alice_count(int n_qubits) const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Concatenate cuts of two subsystems joined by a tensor product.
Bipartition combine(Bipartition a, int n_a, Bipartition b);

class DensityMatrix;

/// Normalized complex amplitude vector on 1..4 qubits with a bipartition label.
class PureState {
 public:
  PureState(Vector amplitudes, Bipartition cut);

  /// Single qubit a|0> + b|1>, owned by Alice.
  static PureState qubit(Complex a, Complex b);
  /// Computational basis state |index> on n qubits.
  static PureState basis(int n_qubits, unsigned index, Bipartition cut);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Bipartition cut() const { return cut_; }

  DensityMatrix to_density() const;

 private:
  Vector amplitudes_;
  int n_qubits_;
  Bipartition cut_;
};

/// Hermitian, PSD, unit-trace complex matrix on 1..4 qubits.
///
/// Constructors validate the invariants within fixed tolerances and reject
/// violations instead of projecting.
class DensityMatrix {
 public:
  DensityMatrix(Matrix entries, Bipartition cut);

  static DensityMatrix pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int n_qubits, Bipartition cut);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  Bipartition cut() const { return cut_; }

  double purity() const;  // tr(rho^2)

 private:
  Matrix entries_;
  int n_qubits_;
  Bipartition cut_;
};

enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellLabel, 4> kBellLabels = {
    BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus,
    BellLabel::PsiMinus};

std::string to_string(BellLabel label);
std::optional<BellLabel> bell_label_from_string(const std::string& name);

/// The four orthonormal two-qubit Bell vectors (cut: qubit 0 Alice, qubit 1 Bob).
struct BellBasis {
  PureState phi_plus, phi_minus, psi_plus, psi_minus;

  const PureState& state(BellLabel label) const;
  static const BellBasis& standard();
};

/// Diagonal Bell-basis weights in the slot order (Phi+, Psi-, Psi+, Phi-).
struct BellCoefficients {
  double A = 0, B = 0, C = 0, D = 0;

  double sum() const { return A + B + C + D; }
  /// Throws unless weights are in [-1e-12, 1+1e-12] and sum to 1 within 1e-10.
  void validate_normalized() const;
};

/// A local operation on one side: a list of operation elements M_i with
/// sum M_i^dag M_i <= identity (equality for trace-preserving operations).
class LocalOperator {
 public:
  LocalOperator(Side side, std::vector<Matrix> elements);

  static LocalOperator unitary(Side side, Matrix u);

  Side side() const { return side_; }
  const std::vector<Matrix>& elements() const { return elements_; }
  int element_dim() const { return static_cast<int>(elements_.front().rows()); }
  bool trace_preserving() const { return trace_preserving_; }

 private:
  Side side_;
  std::vector<Matrix> elements_;
  bool trace_preserving_;
};

// --- Pauli / elementary matrices ---------------------------------------

Matrix identity2();
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();

// --- Core operations ----------------------------------------------------

/// Kronecker composition; cut labels are concatenated.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
PureState tensor(const PureState& a, const PureState& b);

/// Trace out all qubits not in `keep` (sorted, nonempty subset of indices).
/// Kept qubits retain their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

/// Embed an operator acting on the listed qubits (slot order = list order)
/// into the full space of n qubits.
Matrix embed_operator(const Matrix& op, const std::vector<int>& qubits,
                      int n_qubits);

struct Branch {
  double probability = 0;
  // Empty when probability < kBranchEps: the branch is flagged rather than
  // renormalized.
  std::optional<DensityMatrix> state;
};

/// One branch per operation element: probability tr(M rho M^dag) and the
/// renormalized post-state.
std::vector<Branch> apply_local(const DensityMatrix& rho,
                                const LocalOperator& op);

/// Conjugate by a full-space unitary: U rho U^dag.
DensityMatrix conjugate(const Matrix& u, const DensityMatrix& rho);

/// Diagonal Bell-basis matrix elements of a two-qubit state, slot order
/// (Phi+, Psi-, Psi+, Phi-).
BellCoefficients bell_coefficients(const DensityMatrix& rho);

/// -tr(rho ln rho) in nats, with 0 ln 0 := 0 and eigenvalues in [-1e-10, 0)
/// clipped to 0.
double von_neumann_entropy(const DensityMatrix& rho);

struct SchmidtDecomposition {
  double a = 0, b = 0;  // a >= b >= 0, a^2 + b^2 = 1
  Eigen::Vector2cd alice_basis[2];
  Eigen::Vector2cd bob_basis[2];
};

/// Schmidt decomposition of a two-qubit pure state across its cut:
/// psi = a |u0 v0> + b |u1 v1>. Deterministic basis convention: singular
/// values descending; each Alice vector's first nonzero component made real
/// positive, Bob vector absorbing the compensating phase.
SchmidtDecomposition schmidt(const PureState& psi);

// --- Shared numeric helpers ----------------------------------------------

/// Principal square root of a PSD Hermitian matrix (negative eigenvalue noise
/// clamped to zero).
Matrix sqrt_psd(const Matrix& m);

/// Uhlmann fidelity [tr sqrt(sqrt(rho) sigma sqrt(rho))]^2; reduces to
/// <psi|sigma|psi> for pure rho.
double state_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace entkit
