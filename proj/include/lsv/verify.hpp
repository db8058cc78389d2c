#pragma once

#include "lsv/json_io.hpp"
#include "lsv/weyl.hpp"

#include <vector>

namespace lsv {

// One verification battery run: exact identity checks over a box of weights.
// Counterexamples carry the offending weight(s) and both sides in full, so a
// failing identity is diagnosable without rerunning.
struct BatteryResult {
  bool ok = true;
  long checked = 0;
  Json counterexamples = Json::array();

  void record(bool pass, Json detail) {
    ++checked;
    if (!pass) {
      ok = false;
      counterexamples.push_back(std::move(detail));
    }
  }
};

// All weights with coordinates in [lo, hi], odometer order.
std::vector<Vec> weight_box(int rank, Coord lo, Coord hi);

BatteryResult battery_recip(const WeylGroup& wg, Coord box);
BatteryResult battery_sep(const WeylGroup& wg, Coord box);
BatteryResult battery_vdk(const WeylGroup& wg, Coord box, int n_max);
BatteryResult battery_cells(const WeylGroup& wg, Coord box);
BatteryResult battery_mobius(const WeylGroup& wg);
BatteryResult battery_braid(const WeylGroup& wg, Coord box);
BatteryResult battery_dual_basis(const WeylGroup& wg);
BatteryResult battery_diag_pairing(const WeylGroup& wg, Coord box);

}  // namespace lsv
