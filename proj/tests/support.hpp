#pragma once

#include "pbes/pbes.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace testing {

inline std::string data_path(const std::string& name)
{
    return std::string(PBES_DATA_DIR) + "/" + name;
}

inline std::string read_data(const std::string& name)
{
    std::ifstream in(data_path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline pbes::NormalPbes load(const std::string& name)
{
    return pbes::parse_pbes(read_data(name + ".pbes"));
}

} // namespace testing
