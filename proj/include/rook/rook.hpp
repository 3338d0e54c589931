#ifndef ROOK_ROOK_HPP_
#define ROOK_ROOK_HPP_

#include "element_io.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "integer.hpp"
#include "json_io.hpp"
#include "module.hpp"
#include "partial_map.hpp"
#include "presentation.hpp"
#include "subset.hpp"
#include "verify.hpp"

#endif  // ROOK_ROOK_HPP_
