#pragma once

#include "lct/errors.hpp"
#include "lct/vertex_set.hpp"
#include "lct/graph.hpp"
#include "lct/cycle.hpp"
#include "lct/enumerate.hpp"
#include "lct/treedec.hpp"
#include "lct/chordal.hpp"
#include "lct/transversal.hpp"
#include "lct/lemma.hpp"
#include "lct/random.hpp"
#include "lct/generators.hpp"
#include "lct/fixtures.hpp"
#include "lct/io.hpp"
#include "lct/gen_spec.hpp"
