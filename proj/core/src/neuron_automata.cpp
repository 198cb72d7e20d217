#include "catnet/error.hpp"
#include "catnet/transitions.hpp"

namespace catnet {

TransitionSystem integrate_and_fire(int levels, bool leak) {
  if (levels < 1) throw Error(Errc::InvalidArgument, "integrate-and-fire needs at least one level above rest");
  const auto top = static_cast<StateId>(levels);
  std::vector<Label> labels{{"excite", 0}, {"spike", 0}};
  if (leak) labels.push_back({"leak", 0});
  std::vector<Transition> trans;
  for (StateId k = 0; k < top; ++k) trans.push_back({k, 0, k + 1});
  trans.push_back({top, 1, 0});
  if (leak)
    for (StateId k = 1; k <= top; ++k) trans.push_back({k, 2, k - 1});
  return TransitionSystem(top + 1, 0, top, std::move(labels), std::move(trans));
}

}  // namespace catnet
