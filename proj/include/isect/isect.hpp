#pragma once

#include "bigint.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "field_poly.hpp"
#include "finite_field.hpp"
#include "intersective.hpp"
#include "localroots.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "rings.hpp"
#include "upoly.hpp"
