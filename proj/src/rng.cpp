#include "mck/rng.hpp"
