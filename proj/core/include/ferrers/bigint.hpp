#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ferrers {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace ferrers
