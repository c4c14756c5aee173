#ifndef GWCPG_VERSION_HPP_
#define GWCPG_VERSION_HPP_

namespace gwcpg {

/// Library version, "major.minor.patch".
const char* version();

}  // namespace gwcpg

#endif  // GWCPG_VERSION_HPP_
