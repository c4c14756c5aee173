#include "gwcpg/version.hpp"

namespace gwcpg {

const char* version() {
    return GWCPG_VERSION_STRING;
}

}  // namespace gwcpg
