from bistochastic.cli import main

main()
