#ifndef AQUIFER_IO_HPP
#define AQUIFER_IO_HPP

#include <string>

#include "aquifer/trajectory.hpp"

namespace aquifer {

/// Fixed trajectory column contract: t,h,psi,mu,lambda,f,g,gamma,U.
std::string path_csv(const Path& path);

std::string path_json(const Path& path);

}  // namespace aquifer

#endif
