#pragma once

// Umbrella header.
#include "wbh/antipode.hpp"
#include "wbh/base_object.hpp"
#include "wbh/bimonad.hpp"
#include "wbh/entwining.hpp"
#include "wbh/errors.hpp"
#include "wbh/expr.hpp"
#include "wbh/full_report.hpp"
#include "wbh/galois.hpp"
#include "wbh/hopf.hpp"
#include "wbh/hopf_modules.hpp"
#include "wbh/instance_io.hpp"
#include "wbh/instances.hpp"
#include "wbh/linalg.hpp"
#include "wbh/matrix.hpp"
#include "wbh/rational.hpp"
#include "wbh/report.hpp"
#include "wbh/scalar.hpp"
#include "wbh/tensor_map.hpp"
