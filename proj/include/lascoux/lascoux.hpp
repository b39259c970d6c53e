#pragma once

// Convenience include for the whole library.

#include "crystal.hpp"
#include "demazure.hpp"
#include "errors.hpp"
#include "iword.hpp"
#include "json_io.hpp"
#include "polynomial.hpp"
#include "selfcheck.hpp"
#include "starkeys.hpp"
#include "tableaux.hpp"
