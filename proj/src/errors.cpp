#include "congestion/errors.hpp"

#include <sstream>

namespace congestion {

namespace {
std::string overflow_message(double rho) {
    std::ostringstream os;
    os.precision(17);
    os << "congestion overflow: transport step reached max rho = " << rho;
    return os.str();
}
}  // namespace

CongestionOverflow::CongestionOverflow(double new_max_rho)
    : Error(overflow_message(new_max_rho)), new_max_rho_(new_max_rho) {}

}  // namespace congestion
