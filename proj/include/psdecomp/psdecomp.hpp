#pragma once

#include "psdecomp/decomp.hpp"
#include "psdecomp/errors.hpp"
#include "psdecomp/intertwine.hpp"
#include "psdecomp/lemmas.hpp"
#include "psdecomp/matrix.hpp"
#include "psdecomp/multi.hpp"
#include "psdecomp/parallel.hpp"
#include "psdecomp/rational.hpp"
#include "psdecomp/rootsys.hpp"
#include "psdecomp/serialize.hpp"
#include "psdecomp/tables.hpp"
#include "psdecomp/weyl.hpp"
