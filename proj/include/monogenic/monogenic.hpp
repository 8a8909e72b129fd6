#pragma once

#include "monogenic/appell.hpp"
#include "monogenic/axial.hpp"
#include "monogenic/ck.hpp"
#include "monogenic/clifford.hpp"
#include "monogenic/coefficients.hpp"
#include "monogenic/diff_ops.hpp"
#include "monogenic/fueter.hpp"
#include "monogenic/pk.hpp"
#include "monogenic/polynomial.hpp"
#include "monogenic/report.hpp"
#include "monogenic/latex.hpp"
#include "monogenic/profile.hpp"
#include "monogenic/properties.hpp"
#include "monogenic/random.hpp"
#include "monogenic/serialize.hpp"
