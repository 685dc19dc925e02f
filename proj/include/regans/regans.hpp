#pragma once

// Abstract numeration systems on regular languages: ranking and unranking
// in radix order, growth analysis, and compression by base conversion.

#include "regans/alphabet.hpp"
#include "regans/ans.hpp"
#include "regans/automata.hpp"
#include "regans/codec.hpp"
#include "regans/counting.hpp"
#include "regans/error.hpp"
#include "regans/growth.hpp"
#include "regans/matrix.hpp"
#include "regans/regex.hpp"
