#include "omegap/prime.hpp"

// Prime is header-only today; this translation unit anchors the target.
