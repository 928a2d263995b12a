#pragma once

#include "arcalg/algebra.hpp"
#include "arcalg/arc_diagram.hpp"
#include "arcalg/basis_diagram.hpp"
#include "arcalg/element.hpp"
#include "arcalg/error.hpp"
#include "arcalg/laurent.hpp"
#include "arcalg/render.hpp"
#include "arcalg/rep_theory.hpp"
#include "arcalg/surgery.hpp"
#include "arcalg/verify.hpp"
#include "arcalg/weight.hpp"
