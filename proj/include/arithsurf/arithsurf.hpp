#ifndef ARITHSURF_ARITHSURF_HPP
#define ARITHSURF_ARITHSURF_HPP

#include "arithsurf/chatelet.hpp"
#include "arithsurf/cubic_group.hpp"
#include "arithsurf/enriques.hpp"
#include "arithsurf/exactnum.hpp"
#include "arithsurf/fermat.hpp"
#include "arithsurf/forms.hpp"
#include "arithsurf/kummer.hpp"
#include "arithsurf/linalg.hpp"
#include "arithsurf/markoff.hpp"

#endif  // ARITHSURF_ARITHSURF_HPP
