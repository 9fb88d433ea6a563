#include "netdual/subset.hpp"
