#include "aquifer/io.hpp"

#include <cstdio>
#include <sstream>

namespace aquifer {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

std::string path_csv(const Path& path) {
    std::ostringstream os;
    os << "t,h,psi,mu,lambda,f,g,gamma,U\n";
    for (const TrajectoryPoint& pt : path) {
        os << num(pt.t) << "," << num(pt.h) << "," << num(pt.psi) << ","
           << num(pt.mu) << "," << num(pt.lambda) << "," << num(pt.f) << ","
           << num(pt.g) << "," << num(pt.gamma) << "," << num(pt.U) << "\n";
    }
    return os.str();
}

std::string path_json(const Path& path) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < path.size(); ++i) {
        const TrajectoryPoint& pt = path[i];
        if (i) os << ",";
        os << "{\"t\":" << num(pt.t) << ",\"h\":" << num(pt.h)
           << ",\"psi\":" << num(pt.psi) << ",\"mu\":" << num(pt.mu)
           << ",\"lambda\":" << num(pt.lambda) << ",\"f\":" << num(pt.f)
           << ",\"g\":" << num(pt.g) << ",\"gamma\":" << num(pt.gamma)
           << ",\"U\":" << num(pt.U) << "}";
    }
    os << "]";
    return os.str();
}

}  // namespace aquifer
