#pragma once

#include "q5/agassi.hpp"
#include "q5/engine.hpp"
#include "q5/so5.hpp"

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace q5::circuit {

using so5::GivensKind;

// diag(exp(i phases[k])) on one qudit
struct PhaseDiag {
  int qudit = 0;
  Diag5 phases{};
};

// exp(-i angle G_ij)
struct GivensRot {
  GivensKind kind = GivensKind::X;
  int i = 0, j = 1;
  double angle = 0.0;
  int qudit = 0;
};

// exp(-i angle G_ij) on target when the control digit is in control_states
struct CtrlGivens {
  int control = 0;
  std::vector<int> control_states;
  int target = 1;
  GivensKind kind = GivensKind::X;
  int i = 0, j = 1;
  double angle = 0.0;
};

// X^_ab or Y^_ab on target when the control digit is in control_states
struct CtrlPermute {
  int control = 0;
  std::vector<int> control_states;
  int target = 1;
  GivensKind kind = GivensKind::X;
  int a = 0, b = 1;
};

// exp(-i angle G_ab (x) G_mn), G_ab acting on q0 and G_mn on q1
struct TwoQuditGivens {
  PairKind kind = PairKind::XX;
  int a = 0, b = 1, m = 0, n = 1;
  double angle = 0.0;
  int q0 = 0, q1 = 1;
};

using GateOp = std::variant<PhaseDiag, GivensRot, CtrlGivens, CtrlPermute, TwoQuditGivens>;

struct CircuitIR {
  int n_qudits = 1;
  std::vector<GateOp> gates;
  std::map<std::string, std::string> metadata;

  void validate() const;
  void append(const CircuitIR& other);
};

enum class Backend { Native, Controlled };
Backend parse_backend(const std::string& s);
std::string to_string(Backend b);

// Improved uses 6 controlled gates per entangler; Original uses 8.
enum class EntanglerForm { Improved, Original };
std::string to_string(EntanglerForm f);

inline constexpr const char* kTrotterOrdering =
    "U1:Npair,X13,Tz/qudit-asc;U2:V,g/pair-asc/rs-lex/XX,YY";

struct TrotterOptions {
  Backend backend = Backend::Native;
  EntanglerForm form = EntanglerForm::Improved;
  PairingSigns signs{};
};

CircuitIR trotter_step(const ModelInstance& m, double dt, const TrotterOptions& opts = {});
CircuitIR trotter_step(const ModelInstance& m, double dt, Backend backend);
// n_steps repetitions of trotter_step(t / n_steps)
CircuitIR trotter_circuit(const ModelInstance& m, double t, int n_steps, const TrotterOptions& opts = {});

CircuitIR decompose_two_qudit_givens(PairKind kind, LevelPair ab, LevelPair mn, double alpha, int q0 = 0,
                                     int q1 = 1, int n_qudits = 2,
                                     EntanglerForm form = EntanglerForm::Improved);

// e^{-i t3 X34} e^{-i t2 X23} e^{-i t1 X12} e^{-i t0 X01} from |start_level>
CircuitIR prep_single(const std::array<double, 4>& angles, int start_level = 1);
// 4 angles for qudit 0 then 4 per control value 0..4 for qudit 1, from |00>.
// real_frame appends a per-qudit phase correction so every amplitude comes out real.
CircuitIR prep_two(const std::vector<double>& angles, bool real_frame = true);

// Fits for target states; start_level 0 or 1.
std::array<double, 4> fit_prep_single(const Eigen::VectorXcd& target, int start_level = 1);
// Target must be real up to one global phase; 25 components, index 5*d0 + d1.
std::vector<double> fit_prep_two(const Eigen::VectorXcd& target);

CircuitIR inverse(const CircuitIR& c);

struct ResourceCount {
  long long gx = 0, gy = 0, phase = 0, cx = 0, cy = 0, gxx = 0, gyy = 0;
  long long h = 0, rz = 0, cnot = 0;

  long long controlled_entangling() const { return cx + cy; }
  long long native_entangling() const { return gxx + gyy; }
  bool operator==(const ResourceCount&) const = default;
};

// Closed-form per-step tallies.
ResourceCount count_resources(int omega, Backend backend, EntanglerForm form = EntanglerForm::Improved);
// Direct count over an emitted circuit; a controlled gate counts once per control state.
ResourceCount tally(const CircuitIR& c);

DenseGate to_dense(const GateOp& g);
Mat25 two_qudit_givens_matrix(PairKind kind, LevelPair ab, LevelPair mn, double alpha);

StateVector execute(const CircuitIR& c, StateVector state, const ApplyOptions& opts = {});
// Dense composite unitary, only for small registers.
Eigen::MatrixXcd circuit_matrix(const CircuitIR& c, int max_qudits = 3);

// Line-oriented text format, see README.
std::string to_text(const CircuitIR& c);
CircuitIR from_text(const std::string& text);

}  // namespace q5::circuit
