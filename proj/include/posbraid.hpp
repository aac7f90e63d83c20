#pragma once

#include "posbraid/braid.hpp"
#include "posbraid/errors.hpp"
#include "posbraid/homfly.hpp"
#include "posbraid/inner.hpp"
#include "posbraid/json_io.hpp"
#include "posbraid/laurent.hpp"
#include "posbraid/mfw.hpp"
#include "posbraid/resolve.hpp"
