#pragma once

#include "core.hpp"
#include "poset.hpp"
#include "perms.hpp"
#include "qsym.hpp"
#include "shelling.hpp"
#include "verify.hpp"
