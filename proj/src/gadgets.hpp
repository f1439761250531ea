#pragma once

// Tanner-graph templates of the primitive operations.  Every template has,
// per qubit and side, one long and one short terminal; the long terminal sits
// on exactly one check, and that check is the dual of the short terminal on
// the same side.  Initialisation and measurement short terminals lie on no
// check of their own gadget.

#include <vector>

namespace qclc::detail {

enum class GadgetKind { CNOT, H, S, Ix, Iz, InitZ, InitX, MeasZ, MeasX };

struct TermRef {
  int lq;     // local qubit: 0 (control / only qubit), 1 (target)
  bool out;   // output side (bits at t) vs input side (bits at t-1)
  bool z;     // z-bit vs x-bit
};

struct Terminal {
  TermRef ref;
  bool is_long;
  int row;    // attached row for long terminals, dual row for short ones
};

struct GadgetTemplate {
  std::vector<std::vector<TermRef>> rows;
  std::vector<Terminal> terms;
};

inline const GadgetTemplate& gadget_template(GadgetKind k) {
  constexpr bool IN = false, OUT = true, X = false, Z = true;
  static const GadgetTemplate cnot{
      {{{0, IN, X}, {0, OUT, X}},
       {{0, IN, X}, {1, IN, X}, {1, OUT, X}},
       {{0, IN, Z}, {1, IN, Z}, {0, OUT, Z}},
       {{1, IN, Z}, {1, OUT, Z}}},
      {{{0, OUT, X}, true, 0}, {{1, OUT, Z}, true, 3}, {{1, IN, X}, true, 1}, {{0, IN, Z}, true, 2},
       {{0, OUT, Z}, false, 0}, {{1, OUT, X}, false, 3}, {{1, IN, Z}, false, 1}, {{0, IN, X}, false, 2}}};
  static const GadgetTemplate h{
      {{{0, IN, Z}, {0, OUT, X}}, {{0, IN, X}, {0, OUT, Z}}},
      {{{0, IN, X}, true, 1}, {{0, OUT, X}, true, 0}, {{0, IN, Z}, false, 1}, {{0, OUT, Z}, false, 0}}};
  static const GadgetTemplate s{
      {{{0, IN, X}, {0, OUT, X}}, {{0, IN, X}, {0, IN, Z}, {0, OUT, Z}}},
      {{{0, IN, Z}, true, 1}, {{0, OUT, X}, true, 0}, {{0, IN, X}, false, 1}, {{0, OUT, Z}, false, 0}}};
  static const GadgetTemplate ix{
      {{{0, IN, X}, {0, OUT, X}}, {{0, IN, Z}, {0, OUT, Z}}},
      {{{0, IN, Z}, true, 1}, {{0, OUT, X}, true, 0}, {{0, IN, X}, false, 1}, {{0, OUT, Z}, false, 0}}};
  static const GadgetTemplate iz{
      {{{0, IN, X}, {0, OUT, X}}, {{0, IN, Z}, {0, OUT, Z}}},
      {{{0, IN, X}, true, 0}, {{0, OUT, Z}, true, 1}, {{0, IN, Z}, false, 0}, {{0, OUT, X}, false, 1}}};
  static const GadgetTemplate init_z{{{{0, OUT, X}}}, {{{0, OUT, X}, true, 0}, {{0, OUT, Z}, false, 0}}};
  static const GadgetTemplate init_x{{{{0, OUT, Z}}}, {{{0, OUT, Z}, true, 0}, {{0, OUT, X}, false, 0}}};
  static const GadgetTemplate meas_z{{{{0, IN, X}}}, {{{0, IN, X}, true, 0}, {{0, IN, Z}, false, 0}}};
  static const GadgetTemplate meas_x{{{{0, IN, Z}}}, {{{0, IN, Z}, true, 0}, {{0, IN, X}, false, 0}}};
  switch (k) {
    case GadgetKind::CNOT: return cnot;
    case GadgetKind::H: return h;
    case GadgetKind::S: return s;
    case GadgetKind::Ix: return ix;
    case GadgetKind::Iz: return iz;
    case GadgetKind::InitZ: return init_z;
    case GadgetKind::InitX: return init_x;
    case GadgetKind::MeasZ: return meas_z;
    case GadgetKind::MeasX: return meas_x;
  }
  return ix;
}

// Kind (z = true) of the short terminal of local qubit lq on a side; false
// when the gadget has no terminal there.
inline bool short_is_z(GadgetKind k, int lq, bool out, bool* present = nullptr) {
  for (const auto& t : gadget_template(k).terms)
    if (!t.is_long && t.ref.lq == lq && t.ref.out == out) {
      if (present) *present = true;
      return t.ref.z;
    }
  if (present) *present = false;
  return false;
}

}  // namespace qclc::detail
