#pragma once

#include "normcoset/ball.hpp"
#include "normcoset/catalog.hpp"
#include "normcoset/commutator.hpp"
#include "normcoset/conjugacy.hpp"
#include "normcoset/cosets.hpp"
#include "normcoset/element.hpp"
#include "normcoset/errors.hpp"
#include "normcoset/finite.hpp"
#include "normcoset/free_bimodule.hpp"
#include "normcoset/group.hpp"
#include "normcoset/group_algebra.hpp"
#include "normcoset/idempotents.hpp"
#include "normcoset/json_io.hpp"
#include "normcoset/normalizer.hpp"
#include "normcoset/subgroup.hpp"
#include "normcoset/tindex.hpp"
#include "normcoset/verify.hpp"
#include "normcoset/word.hpp"
