#pragma once

#include "jacsyz/betti.hpp"
#include "jacsyz/fields.hpp"
#include "jacsyz/fixtures.hpp"
#include "jacsyz/groebner.hpp"
#include "jacsyz/jacobian.hpp"
#include "jacsyz/linalg.hpp"
#include "jacsyz/module.hpp"
#include "jacsyz/monomial.hpp"
#include "jacsyz/par.hpp"
#include "jacsyz/parse.hpp"
#include "jacsyz/predict.hpp"
#include "jacsyz/report.hpp"
#include "jacsyz/resolution.hpp"
#include "jacsyz/ring.hpp"
#include "jacsyz/toric.hpp"
