#include "mirfs/model.hpp"

namespace mirfs {

void StateSpaceModel::validate(const ParamVector& theta) const {
  // Per-parameter bounds are enforced by ParamVector itself; models with
  // joint constraints override this.
  (void)theta;
}

}  // namespace mirfs
