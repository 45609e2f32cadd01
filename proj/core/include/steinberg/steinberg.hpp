#pragma once

#include "steinberg/characters.hpp"
#include "steinberg/errors.hpp"
#include "steinberg/group.hpp"
#include "steinberg/grothendieck.hpp"
#include "steinberg/linkage.hpp"
#include "steinberg/root_data.hpp"
#include "steinberg/serialize.hpp"
#include "steinberg/simple_a1.hpp"
#include "steinberg/weight.hpp"
#include "steinberg/weight_function.hpp"
#include "steinberg/weyl_group.hpp"
