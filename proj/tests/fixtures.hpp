#pragma once
// Shared fixture loading. WONDER_FIXTURES overrides the source directory.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "wonder/rootsys.hpp"

namespace fixtures {

inline std::string dir() {
    if (const char* e = std::getenv("WONDER_FIXTURES")) return e;
    return WONDER_FIXTURES_DIR;
}

inline nlohmann::json load(const std::string& name) {
    std::ifstream in(dir() + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name + " in " + dir());
    return nlohmann::json::parse(in);
}

// "a2+a3-a1" in a rank-r system
inline wonder::Root parse_root(const std::string& s, int rank) {
    std::vector<int> c(rank, 0);
    std::size_t i = 0;
    int sign = 1;
    while (i < s.size()) {
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '+' ? 1 : -1;
            ++i;
            continue;
        }
        if (s[i] != 'a') throw std::invalid_argument("bad root " + s);
        std::size_t j = i + 1;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        c.at(std::stoi(s.substr(i + 1, j - i - 1)) - 1) += sign;
        sign = 1;
        i = j;
    }
    return wonder::Root{c};
}

inline std::vector<int> digits(const std::string& s) {
    std::vector<int> v;
    for (char ch : s) v.push_back(ch - '0');
    return v;
}

}  // namespace fixtures
