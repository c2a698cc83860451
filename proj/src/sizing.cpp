#include "dfadec/sizing.hpp"

#include <cmath>

#include "dfadec/errors.hpp"

namespace dfadec {

double DescriptionLength::bits() const { return nats / std::log(2.0); }

DescriptionLength dfa_dl(const Dfa& dfa) {
  const double m = static_cast<double>(dfa.num_states());
  const double sigma = static_cast<double>(dfa.alphabet().size());
  if (sigma < 1) throw InputError("description length needs a non-empty alphabet");
  const double f = static_cast<double>(dfa.accepting_states().size());
  const double z = static_cast<double>(dfa.non_stuttering_count());

  const double nats = 3.0 + 2.0 * std::log(m) + 2.0 * std::log(sigma) +
                      (f + 1.0) * std::log(m) + z * (std::log(sigma) + 2.0 * std::log(m));
  return DescriptionLength{nats};
}

DescriptionLength decomposition_dl(const Decomposition& decomp) {
  const auto n = static_cast<double>(decomp.size());
  const double sigma = static_cast<double>(decomp.alphabet().size());
  const double m1 = static_cast<double>(decomp.members().front().num_states());

  double total = 0.0;
  for (const Dfa& d : decomp.members()) total += dfa_dl(d).nats;
  total -= (n - 1.0) * (2.0 * std::log(sigma) + 1.0);
  total -= 2.0 * (n - 1.0) * std::log(m1);
  return DescriptionLength{total};
}

}  // namespace dfadec
