#pragma once

#include "diamtwo/field.hpp"
#include "diamtwo/linalg.hpp"
#include "diamtwo/forms.hpp"
#include "diamtwo/classify.hpp"
#include "diamtwo/group.hpp"
#include "diamtwo/cayley.hpp"
#include "diamtwo/bounds.hpp"
#include "diamtwo/instance.hpp"
#include "diamtwo/report.hpp"
